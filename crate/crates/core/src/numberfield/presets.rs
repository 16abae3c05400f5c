use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{rat_vec, RatMatrix};

use super::{ConjugationSpec, FieldSpec, NumberField};

/// Preset fields: name, defining polynomial (ascending), short description.
pub const PRESETS: &[(&str, &[i64], &str)] = &[
    ("rationals", &[0, 1], "Q"),
    ("eisenstein", &[1, -1, 1], "Q(sqrt(-3)), t = (1 + sqrt(-3))/2"),
    ("gaussian", &[1, 0, 1], "Q(sqrt(-1)), t = i"),
    ("sqrt2", &[-2, 0, 1], "Q(sqrt(2)), t = sqrt(2)"),
    (
        "biquadratic",
        &[1, 0, -1, 0, 1],
        "Q(sqrt(-3), sqrt(-1)) = Q(z), z a primitive 12th root of unity",
    ),
];

pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.0).collect()
}

/// Looks up a preset field. All presets have monogenic rings of integers, so
/// the integral basis is the power basis.
pub fn preset(name: &str) -> Result<Arc<NumberField>> {
    let (name, poly, _) = PRESETS
        .iter()
        .find(|p| p.0 == name)
        .ok_or_else(|| Error::InvalidField(format!("unknown preset {name:?} (known: {})", preset_names().join(", "))))?;
    let n = poly.len() - 1;
    NumberField::new(FieldSpec {
        name: name.to_string(),
        min_poly: rat_vec(poly),
        integral_basis: RatMatrix::identity(n),
        conjugation: ConjugationSpec::Auto,
        irreducibility_certified: false,
    })
}
