use hilbcover::body::{hausdorff_distance, random_hull};
use hilbcover::metrics::{funk_distance, hilbert_distance};
use hilbcover::{ConvexBody, Pt, SymMode};
use proptest::prelude::*;

fn point(v: (f64, f64)) -> Pt {
    Pt::new(v.0, v.1, 0.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polar_is_an_involution(seed in 0u64..10_000, n in 5usize..14) {
        let k = random_hull(2, n, seed).unwrap();
        let back = k.polar().unwrap().polar().unwrap();
        prop_assert!(hausdorff_distance(&back, &k).unwrap() < 1e-9);
    }

    #[test]
    fn hilbert_is_symmetric_mean_of_funk(
        seed in 0u64..10_000,
        x in (-0.3f64..0.3, -0.3f64..0.3),
        y in (-0.3f64..0.3, -0.3f64..0.3),
    ) {
        let k = random_hull(2, 9, seed).unwrap().scale_by(4.0).unwrap();
        let (x, y) = (point(x), point(y));
        let h = hilbert_distance(&k, &x, &y).unwrap();
        let f = funk_distance(&k, &x, &y).unwrap() + funk_distance(&k, &y, &x).unwrap();
        prop_assert!((2.0 * h - f).abs() < 1e-9);
        prop_assert!((h - hilbert_distance(&k, &y, &x).unwrap()).abs() < 1e-12);
        prop_assert!(h >= 0.0);
    }

    #[test]
    fn hilbert_triangle_inequality(
        seed in 0u64..10_000,
        x in (-0.3f64..0.3, -0.3f64..0.3),
        y in (-0.3f64..0.3, -0.3f64..0.3),
        z in (-0.3f64..0.3, -0.3f64..0.3),
    ) {
        let k = random_hull(2, 8, seed).unwrap().scale_by(4.0).unwrap();
        let (x, y, z) = (point(x), point(y), point(z));
        let d = |a: &Pt, b: &Pt| hilbert_distance(&k, a, b).unwrap();
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z) + 1e-9);
    }

    #[test]
    fn interval_distance_is_artanh(t in -0.95f64..0.95) {
        let k = ConvexBody::interval(-1.0, 1.0).unwrap();
        let d = hilbert_distance(&k, &Pt::zeros(), &Pt::new(t, 0.0, 0.0)).unwrap();
        prop_assert!((d - t.abs().atanh()).abs() < 1e-12);
    }

    #[test]
    fn symmetrizations_are_nested(seed in 0u64..10_000, n in 4usize..12) {
        let c = random_hull(2, n, seed).unwrap();
        let core = c.symmetrize(SymMode::Core).unwrap().volume();
        let union = c.symmetrize(SymMode::Union).unwrap().volume();
        let diff = c.symmetrize(SymMode::Difference).unwrap().volume();
        let v = c.volume();
        prop_assert!(core <= v + 1e-12 && v <= union + 1e-12);
        prop_assert!(union <= diff + 1e-12 && diff <= 6.0 * v + 1e-9);
        prop_assert!(core >= 0.25 * v - 1e-12);
    }

    #[test]
    fn gauge_is_positively_homogeneous(seed in 0u64..10_000, x in (-1.0f64..1.0, -1.0f64..1.0), s in 0.1f64..5.0) {
        let k = random_hull(2, 7, seed).unwrap();
        let x = point(x);
        let a = k.gauge(&(x * s)).unwrap();
        prop_assert!((a - s * k.gauge(&x).unwrap()).abs() < 1e-9 * (1.0 + a));
    }
}
