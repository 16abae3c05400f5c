//! Root-set description files.
//!
//! ```text
//! dim: 2
//! form: 2 1 1 2
//! roots: 1 0; -1 0; 0 1; 0 -1; 1 -1; -1 1
//! ```
//!
//! `form` is the row-major Gram matrix (defaults to the identity). `roots`
//! may be repeated; all listed vectors are concatenated.

use crate::error::{Error, Result};
use crate::exactmath::{QuadraticForm, RatMatrix};
use crate::textfmt::{parse_vector_list, KeyValues};

use super::RootSet;

pub struct RootSetFile;

impl RootSetFile {
    pub fn parse(text: &str) -> Result<RootSet> {
        let kv = KeyValues::parse(text)?;
        kv.expect_only(&["dim", "form", "roots"])?;
        let dim: usize = kv
            .required("dim")?
            .parse()
            .map_err(|_| Error::Parse("dim must be a positive integer".into()))?;
        if dim == 0 {
            return Err(Error::Parse("dim must be a positive integer".into()));
        }
        let gram = match kv.get("form") {
            Some(_) => RatMatrix::from_flat(dim, dim, kv.rationals("form")?)
                .map_err(|_| Error::Parse(format!("form must have {} entries", dim * dim)))?,
            None => RatMatrix::identity(dim),
        };
        let form = QuadraticForm::new(gram).map_err(|_| Error::Parse("form must be symmetric".into()))?;
        let mut roots = Vec::new();
        for line in kv.all("roots") {
            roots.extend(parse_vector_list(line)?);
        }
        if roots.is_empty() {
            return Err(Error::Parse("no roots given".into()));
        }
        if let Some(r) = roots.iter().find(|r| r.len() != dim) {
            return Err(Error::Parse(format!("root with {} coordinates in dimension {dim}", r.len())));
        }
        if !form.is_positive_definite() {
            return Err(Error::Parse("form is not positive-definite".into()));
        }
        RootSet::new(form, roots)
    }

    pub fn format(r: &RootSet) -> String {
        let gram: Vec<String> = r.form().gram().entries().iter().map(crate::exactmath::fmt_rational).collect();
        let roots: Vec<String> = r.roots().iter().map(|v| {
            v.iter().map(crate::exactmath::fmt_rational).collect::<Vec<_>>().join(" ")
        }).collect();
        format!("dim: {}\nform: {}\nroots: {}\n", r.dim(), gram.join(" "), roots.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "dim: 2\nform: 2 1 1 2\nroots: 1 0; -1 0; 0 1\nroots: 0 -1; 1 -1; -1 1\n";
        let r = RootSetFile::parse(text).unwrap();
        assert_eq!(r.roots().len(), 6);
        let again = RootSetFile::parse(&RootSetFile::format(&r)).unwrap();
        assert_eq!(again.roots(), r.roots());
        assert_eq!(again.form(), r.form());
    }

    #[test]
    fn malformed() {
        assert!(RootSetFile::parse("dim: 2\n").is_err());
        assert!(RootSetFile::parse("dim: 2\nroots: 1 0 0\n").is_err());
        assert!(RootSetFile::parse("dim: 2\nform: 1 2 3 4\nroots: 1 0\n").is_err());
        assert!(RootSetFile::parse("dim: 1\nform: -1\nroots: 1\n").is_err());
        assert!(RootSetFile::parse("dim: x\nroots: 1\n").is_err());
    }
}
