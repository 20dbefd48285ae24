//! Integer root vectors over `ε₁..ε_n, δ₁..δ_m` and the imaginary root `δ̄`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::rect::RectShape;

/// `Σ a_i ε_i + Σ b_j δ_j + c δ̄`.
///
/// The form is `(ε_i, ε_j) = δ_ij = −(δ_i, δ_j)`, `(ε, δ) = 0`, and `δ̄`
/// is isotropic and orthogonal to everything.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlobalRoot {
    eps: Vec<i64>,
    del: Vec<i64>,
    dbar: i64,
}

impl GlobalRoot {
    pub fn zero(shape: &RectShape) -> Self {
        GlobalRoot { eps: vec![0; shape.n()], del: vec![0; shape.m()], dbar: 0 }
    }

    pub fn from_parts(eps: Vec<i64>, del: Vec<i64>, dbar: i64) -> Self {
        GlobalRoot { eps, del, dbar }
    }

    pub fn epsilon(shape: &RectShape, i: usize) -> Self {
        let mut r = Self::zero(shape);
        r.eps[i - 1] = 1;
        r
    }

    pub fn delta(shape: &RectShape, j: usize) -> Self {
        let mut r = Self::zero(shape);
        r.del[j - 1] = 1;
        r
    }

    pub fn dbar(shape: &RectShape) -> Self {
        let mut r = Self::zero(shape);
        r.dbar = 1;
        r
    }

    /// `ε_s` for a shuffle symbol `s`, with `δ_j = ε_{n+j}`.
    pub fn symbol(shape: &RectShape, s: usize) -> Self {
        if s <= shape.n() {
            Self::epsilon(shape, s)
        } else {
            Self::delta(shape, s - shape.n())
        }
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn del(&self) -> &[i64] {
        &self.del
    }

    pub fn dbar_coeff(&self) -> i64 {
        self.dbar
    }

    pub fn form(&self, other: &GlobalRoot) -> i64 {
        let e: i64 = self.eps.iter().zip(&other.eps).map(|(a, b)| a * b).sum();
        let d: i64 = self.del.iter().zip(&other.del).map(|(a, b)| a * b).sum();
        e - d
    }

    pub fn is_zero(&self) -> bool {
        self.dbar == 0 && self.eps.iter().chain(&self.del).all(|&c| c == 0)
    }

    /// A real root of square length zero (grey node).
    pub fn is_isotropic(&self) -> bool {
        self.form(self) == 0 && self.eps.iter().chain(&self.del).any(|&c| c != 0)
    }

    /// Parses the rendering produced by `Display`, e.g. `dbar - d1 + e3`.
    pub fn parse(shape: &RectShape, s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("root {s:?}: {why}"));
        let mut out = Self::zero(shape);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(out);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, c) in compact.char_indices() {
            if (c == '+' || c == '-') && idx > 0 {
                terms.push(&compact[start..idx]);
                start = idx;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let split = body.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(|| bad("no basis"))?;
            let coeff: i64 = if split == 0 { 1 } else { body[..split].parse().map_err(|_| bad("bad coefficient"))? };
            let basis = &body[split..];
            let c = sign * coeff;
            if basis == "dbar" {
                out.dbar += c;
            } else if let Some(i) = basis.strip_prefix('e') {
                let i: usize = i.parse().map_err(|_| bad("bad index"))?;
                if i == 0 || i > shape.n() {
                    return Err(bad("index out of range"));
                }
                out.eps[i - 1] += c;
            } else if let Some(j) = basis.strip_prefix('d') {
                let j: usize = j.parse().map_err(|_| bad("bad index"))?;
                if j == 0 || j > shape.m() {
                    return Err(bad("index out of range"));
                }
                out.del[j - 1] += c;
            } else {
                return Err(bad("unknown basis element"));
            }
        }
        Ok(out)
    }
}

impl Add for &GlobalRoot {
    type Output = GlobalRoot;
    fn add(self, rhs: &GlobalRoot) -> GlobalRoot {
        GlobalRoot {
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
            del: self.del.iter().zip(&rhs.del).map(|(a, b)| a + b).collect(),
            dbar: self.dbar + rhs.dbar,
        }
    }
}

impl Sub for &GlobalRoot {
    type Output = GlobalRoot;
    fn sub(self, rhs: &GlobalRoot) -> GlobalRoot {
        self + &(-rhs)
    }
}

impl Neg for &GlobalRoot {
    type Output = GlobalRoot;
    fn neg(self) -> GlobalRoot {
        GlobalRoot {
            eps: self.eps.iter().map(|a| -a).collect(),
            del: self.del.iter().map(|a| -a).collect(),
            dbar: -self.dbar,
        }
    }
}

impl fmt::Display for GlobalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = std::iter::once((self.dbar, "dbar".to_string()))
            .chain(self.del.iter().enumerate().map(|(j, &c)| (c, format!("d{}", j + 1))))
            .chain(self.eps.iter().enumerate().map(|(i, &c)| (c, format!("e{}", i + 1))))
            .filter(|(c, _)| *c != 0);
        let mut first = true;
        for (c, name) in terms {
            let mag = c.abs();
            let body = if mag == 1 { name } else { format!("{mag}{name}") };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
