//! Global constants and the tolerance table used by checks.
//!
//! | Category    | Default            | Used by                                  |
//! |-------------|--------------------|------------------------------------------|
//! | exact       | 1e-9 absolute      | closed-form identities, polar involution |
//! | quadrature  | 1e-6 relative      | area identities evaluated by quadrature  |
//! | Monte Carlo | 3 x std_error      | sampled volume identities                |

/// Absolute coordinate tolerance for bodies of circumradius O(1).
pub const EPS_GEOM: f64 = 1e-9;

/// Points closer than this to the boundary are not interior for metric purposes.
pub const EPS_INTERIOR: f64 = 1e-12;

/// Localization radius: Hilbert radii above this are rejected.
pub const R_PLUS: f64 = 8.0;

/// Bodies built from user input are rescaled to this circumradius when larger.
pub const MAX_CIRCUMRADIUS: f64 = 10.0;

/// Default number of directions for radial constructions in the plane.
pub const N_DIR_2D: usize = 720;
/// Default number of directions on the sphere.
pub const N_DIR_3D: usize = 1280;

/// Default Monte Carlo sample count.
pub const N_SAMPLES: usize = 20_000;
/// Default Gauss-Legendre order per edge.
pub const QUAD_ORDER: usize = 8;

/// Absolute tolerance for distance-to-set minimization.
pub const TOL_SET_DISTANCE: f64 = 1e-6;

/// Budgets for empirical covering-duality ratios, by dimension.
pub const DUALITY_BUDGET_1D: f64 = 3.0;
pub const DUALITY_BUDGET_2D: f64 = 64.0;
pub const DUALITY_BUDGET_3D: f64 = 512.0;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "HILBCOVER_THREADS";

/// Tolerances used by named checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub exact: f64,
    pub quadrature_rel: f64,
    pub mc_sigmas: f64,
    pub cross: f64,
    pub dual: f64,
    pub jacobian: f64,
    pub chord: f64,
    pub transfer: f64,
    pub metric: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact: 1e-9,
            quadrature_rel: 1e-6,
            mc_sigmas: 3.0,
            cross: 1e-8,
            dual: 1e-6,
            jacobian: 1e-12,
            chord: 1e-6,
            transfer: 1e-5,
            metric: 1e-9,
        }
    }
}
