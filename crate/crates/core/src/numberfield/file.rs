//! Field description files.
//!
//! ```text
//! # Q(sqrt(-3))
//! name: eisenstein
//! min_poly: 1 -1 1
//! integral_basis: 1 0 0 1
//! conjugation: auto
//! ```
//!
//! `min_poly` lists rational coefficients in ascending degree, `integral_basis`
//! is row-major (row i = power-basis coordinates of b_i), `conjugation` is
//! `auto`, `none` or an automorphism index. An optional `irreducible: certified`
//! line vouches for irreducibility of polynomials of degree > 4.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{RatMatrix, Rational};
use crate::textfmt::KeyValues;

use super::{ConjugationSpec, FieldSpec, NumberField};

#[derive(Clone, Debug)]
pub struct FieldDescription {
    pub spec: FieldSpec,
}

impl FieldDescription {
    pub fn parse(text: &str) -> Result<Self> {
        let kv = KeyValues::parse(text)?;
        kv.expect_only(&["name", "min_poly", "integral_basis", "conjugation", "irreducible"])?;
        let name = kv.required("name")?.to_string();
        let min_poly: Vec<Rational> = kv.rationals("min_poly")?;
        if min_poly.len() < 2 {
            return Err(Error::Parse("min_poly needs at least two coefficients".into()));
        }
        let n = min_poly.len() - 1;
        let integral_basis = match kv.get("integral_basis") {
            Some(_) => RatMatrix::from_flat(n, n, kv.rationals("integral_basis")?)
                .map_err(|_| Error::Parse(format!("integral_basis must have {} entries", n * n)))?,
            None => RatMatrix::identity(n),
        };
        let conjugation = match kv.get("conjugation").unwrap_or("auto") {
            "auto" => ConjugationSpec::Auto,
            "none" => ConjugationSpec::None,
            other => ConjugationSpec::Index(
                other
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad conjugation value {other:?}")))?,
            ),
        };
        let irreducibility_certified = match kv.get("irreducible") {
            None => false,
            Some("certified") => true,
            Some(other) => return Err(Error::Parse(format!("bad irreducible value {other:?}"))),
        };
        Ok(Self {
            spec: FieldSpec {
                name,
                min_poly,
                integral_basis,
                conjugation,
                irreducibility_certified,
            },
        })
    }

    pub fn build(self) -> Result<Arc<NumberField>> {
        NumberField::new(self.spec)
    }
}

/// Either a preset name or a path to a description file.
pub fn make_field(spec: &str) -> Result<Arc<NumberField>> {
    if super::preset_names().contains(&spec) {
        return super::preset(spec);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("{spec:?} is neither a preset nor a readable file: {e}")))?;
    FieldDescription::parse(&text)?.build()
}
