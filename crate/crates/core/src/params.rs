use crate::error::{Error, Result};

/// The triple `(nu, s, t)` plus an optional composition of `t` into `s` parts.
///
/// `s` and `t` are signed: the recurrences are polynomial in both and are
/// routinely evaluated at points like `(0, 1)` or `(s, -s)`. Code that needs
/// the combinatorial reading calls [`Params::composition`], which insists on
/// `s >= 1` and `t >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub nu: u32,
    pub s: i64,
    pub t: i64,
    pub tvec: Option<Vec<u32>>,
}

impl Params {
    pub fn new(nu: u32, s: i64, t: i64) -> Result<Self> {
        if nu < 1 {
            return Err(Error::InvalidParams(format!("nu must be >= 1, got {nu}")));
        }
        Ok(Params {
            nu,
            s,
            t,
            tvec: None,
        })
    }

    /// Parameters determined by a composition: `s` is its length and `t` its sum.
    pub fn with_tvec(nu: u32, tvec: Vec<u32>) -> Result<Self> {
        if tvec.is_empty() {
            return Err(Error::InvalidParams(
                "composition must have at least one part".into(),
            ));
        }
        let mut p = Params::new(nu, tvec.len() as i64, tvec.iter().map(|&x| x as i64).sum())?;
        p.tvec = Some(tvec);
        Ok(p)
    }

    /// The composition of `t` into `s` parts: the explicit one if present,
    /// otherwise `(t, 0, ..., 0)`.
    pub fn composition(&self) -> Result<Vec<u32>> {
        if let Some(tvec) = &self.tvec {
            let sum: i64 = tvec.iter().map(|&x| x as i64).sum();
            if tvec.len() as i64 != self.s || sum != self.t {
                return Err(Error::InvalidParams(format!(
                    "composition {tvec:?} does not split t={} into s={} parts",
                    self.t, self.s
                )));
            }
            return Ok(tvec.clone());
        }
        if self.s < 1 || self.t < 0 {
            return Err(Error::InvalidParams(format!(
                "combinatorial interpretation needs s >= 1 and t >= 0, got s={}, t={}",
                self.s, self.t
            )));
        }
        let mut tvec = vec![0u32; self.s as usize];
        tvec[0] = self.t as u32;
        Ok(tvec)
    }
}
