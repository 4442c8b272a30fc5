use crate::body::{generate, ConvexBody};
use crate::config::MAX_CIRCUMRADIUS;
use crate::error::{GeomError, Result};
use crate::Pt;
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BodyJson {
    dim: usize,
    vertices: Vec<Vec<f64>>,
    #[serde(default)]
    name: Option<String>,
}

/// Body from a JSON object `{"dim", "vertices", "name"?}` or a generator
/// string (`dim` applies to generators only). Bodies with circumradius above
/// [`MAX_CIRCUMRADIUS`] are scaled down and the factor is kept in
/// [`ConvexBody::scale`].
pub fn parse_body_spec(text: &str, dim: usize) -> Result<ConvexBody> {
    let t = text.trim();
    let body = if t.starts_with('{') {
        let j: BodyJson = serde_json::from_str(t).map_err(|e| GeomError::ParseError(e.to_string()))?;
        let b = ConvexBody::from_coords(j.dim, &j.vertices).map_err(|e| match e {
            GeomError::DimensionMismatch { expected, got } => GeomError::ValidationError(format!(
                "every vertex needs `dim` = {expected} coordinates (found a row with {got})"
            )),
            other => other,
        })?;
        match j.name {
            Some(n) => b.with_name(n),
            None => b,
        }
    } else {
        generate(t, dim)?
    };
    let r = body.circumradius();
    if r > MAX_CIRCUMRADIUS {
        let s = MAX_CIRCUMRADIUS / r;
        let name = body.name().map(str::to_string);
        let mut scaled = body.scale_by(s)?.with_scale(s);
        if let Some(n) = name {
            scaled = scaled.with_name(n);
        }
        return Ok(scaled);
    }
    Ok(body)
}

/// Point from comma-separated coordinates, e.g. `0.1,-0.2`.
pub fn parse_point(text: &str, dim: usize) -> Result<Pt> {
    let parts: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.len() != dim {
        return Err(GeomError::DimensionMismatch {
            expected: dim,
            got: parts.len(),
        });
    }
    let mut p = Pt::zeros();
    for (k, s) in parts.iter().enumerate() {
        p[k] = s
            .parse()
            .map_err(|_| GeomError::ParseError(format!("bad coordinate `{s}`")))?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_and_json() {
        let sq = parse_body_spec("cube", 2).unwrap();
        assert_eq!(sq.volume(), 4.0);
        let iv = parse_body_spec(r#"{"dim":1,"vertices":[[-1],[1]]}"#, 3).unwrap();
        assert_eq!(iv.dim(), 1);
        assert_eq!(iv.volume(), 2.0);
        let a = parse_body_spec("random_hull:12,seed=7", 2).unwrap();
        let b = parse_body_spec("random_hull:12,seed=7", 2).unwrap();
        assert_eq!(a.vertices(), b.vertices());
    }

    #[test]
    fn large_bodies_are_rescaled() {
        let b = parse_body_spec(r#"{"dim":2,"vertices":[[-40,-40],[40,-40],[0,40]]}"#, 2).unwrap();
        assert!((b.circumradius() - MAX_CIRCUMRADIUS).abs() < 1e-9);
        assert!((b.scale() - MAX_CIRCUMRADIUS / (40.0f64 * 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_body_spec("{\"dim\":2", 2),
            Err(GeomError::ParseError(_))
        ));
        assert!(matches!(
            parse_body_spec(r#"{"dim":2,"vertices":[[0,0],[1]]}"#, 2),
            Err(GeomError::ValidationError(_))
        ));
        assert!(matches!(parse_body_spec("blob", 2), Err(GeomError::ParseError(_))));
        assert_eq!(parse_point("0.5, -1", 2).unwrap(), Pt::new(0.5, -1.0, 0.0));
        assert!(parse_point("1,2,3", 2).is_err());
    }
}
