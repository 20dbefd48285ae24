//! The n×m rectangle and the three encodings of a diagram inside it.
//!
//! Orientation contract: a [`Diagram`] stores parts `λ₁ ≥ … ≥ λ_n`, and
//! row `ε_i` of the rectangle (rows indexed top-down) holds `λ_{n+1-i}`
//! boxes, so `λ₁` is the bottom row. The border word of a diagram traces
//! its upper border from the top-left to the bottom-right corner.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectShape {
    n: usize,
    m: usize,
    coprime: bool,
}

impl RectShape {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidShape { n, m });
        }
        Ok(RectShape { n, m, coprime: n.gcd(&m) == 1 })
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Word length `m + n`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n + self.m
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    pub fn require_coprime(&self) -> Result<()> {
        if self.coprime {
            Ok(())
        } else {
            Err(Error::NonCoprimeShape { n: self.n, m: self.m })
        }
    }

    /// Checks the conditions under which classes of `X × Z` are handled:
    /// coprime and not the 1×1 square.
    pub fn require_class_shape(&self) -> Result<()> {
        self.require_coprime()?;
        if self.n == 1 && self.m == 1 {
            return Err(Error::ShapeUnsupported {
                n: 1,
                m: 1,
                reason: "the 1x1 rectangle has an isotropic highest root",
            });
        }
        Ok(())
    }

    /// `|X| = C(m+n, n)`.
    pub fn diagram_count(&self) -> usize {
        binomial(self.len(), self.n)
    }

    /// `C(m+n, n) / (m+n)`, the number of classes in each degree.
    pub fn classes_per_degree(&self) -> usize {
        self.diagram_count() / self.len()
    }

    pub fn empty(&self) -> Diagram {
        Diagram(vec![0; self.n])
    }

    pub fn full(&self) -> Diagram {
        Diagram(vec![self.m; self.n])
    }

    /// The hook `(m, 1^{n-1})`.
    pub fn hook(&self) -> Diagram {
        let mut parts = vec![1; self.n];
        parts[0] = self.m;
        Diagram(parts)
    }

    /// All diagrams in the rectangle, in lexicographic order of parts.
    pub fn diagrams(&self) -> Vec<Diagram> {
        fn fill(n: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Diagram>) {
            if prefix.len() == n {
                out.push(Diagram(prefix.clone()));
                return;
            }
            for p in 0..=bound {
                prefix.push(p);
                fill(n, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::with_capacity(self.diagram_count());
        fill(self.n, self.m, &mut Vec::with_capacity(self.n), &mut out);
        out
    }

    /// All positive odd roots `ε_i − δ_j`.
    pub fn positive_roots(&self) -> impl Iterator<Item = OddRoot> + '_ {
        (1..=self.n).cartesian_product(1..=self.m).map(|(i, j)| OddRoot::positive(i, j))
    }

    /// All signed odd roots, positive ones first.
    pub fn signed_roots(&self) -> Vec<OddRoot> {
        let pos: Vec<_> = self.positive_roots().collect();
        let neg: Vec<_> = pos.iter().map(|r| r.negate()).collect();
        pos.into_iter().chain(neg).collect()
    }

    pub fn check_root(&self, root: OddRoot) -> Result<OddRoot> {
        if (1..=self.n).contains(&root.i) && (1..=self.m).contains(&root.j) {
            Ok(root)
        } else {
            Err(Error::InvalidRoot(format!("{root} outside a {}x{} rectangle", self.n, self.m)))
        }
    }

    /// `R^i(w)`: moves the first `i` letters to the end; negative `i`
    /// rotates the other way.
    pub fn rotate_word(&self, w: &BorderWord, i: i64) -> BorderWord {
        let len = w.0.len();
        let s = i.rem_euclid(len as i64) as usize;
        let mut letters = w.0.clone();
        letters.rotate_left(s);
        BorderWord(letters)
    }

    /// `η^i ν^j α`, where `ν(ε_a) = ε_{a+1}` (mod n) and `η(δ_{b+1}) = δ_b`
    /// (mod m). The sign is preserved.
    pub fn rotate_root(&self, root: OddRoot, i: i64, j: i64) -> OddRoot {
        let n = self.n as i64;
        let m = self.m as i64;
        let a = (root.i as i64 - 1 + j).rem_euclid(n) + 1;
        let b = (root.j as i64 - 1 - i).rem_euclid(m) + 1;
        OddRoot { sign: root.sign, i: a as usize, j: b as usize }
    }

    /// Residues `(i mod m, j mod n)` with `i·n + j·m = k`.
    pub fn solve_rotation(&self, k: i64) -> Result<(usize, usize)> {
        self.require_coprime()?;
        let n = self.n as i64;
        let m = self.m as i64;
        // n·x ≡ 1 (mod m)
        let inv = n.extended_gcd(&m).x.rem_euclid(m);
        let i = (k.rem_euclid(m) * inv).rem_euclid(m);
        let j = (k - i * n) / m;
        debug_assert_eq!(i * n + j * m, k);
        Ok((i as usize, j.rem_euclid(n) as usize))
    }
}

impl fmt::Display for RectShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A Young diagram in the rectangle, as its weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram(Vec<usize>);

impl Diagram {
    pub fn new(shape: &RectShape, parts: Vec<usize>) -> Result<Self> {
        if parts.len() != shape.n {
            return Err(Error::InvalidDiagram(format!("expected {} parts, got {}", shape.n, parts.len())));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.first().is_some_and(|&p| p > shape.m) {
            return Err(Error::InvalidDiagram(format!("{parts:?} exceeds {} columns", shape.m)));
        }
        Ok(Diagram(parts))
    }

    /// Parses a comma list such as `3,1`. Missing trailing parts are zero.
    pub fn parse(shape: &RectShape, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut parts = if s.is_empty() || s == "-" {
            Vec::new()
        } else {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("part {p:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        };
        if parts.len() > shape.n {
            return Err(Error::InvalidDiagram(format!("more than {} parts in {s:?}", shape.n)));
        }
        parts.resize(shape.n, 0);
        Diagram::new(shape, parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Boxes in row `ε_i`, i.e. `λ_{n+1-i}`.
    pub fn row_len(&self, i: usize) -> usize {
        self.0[self.0.len() - i]
    }

    /// `λ'_j = |{i : λ_i ≥ j}|` for `j = 1..=m`.
    pub fn dual(&self, shape: &RectShape) -> Vec<usize> {
        (1..=shape.m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect()
    }

    /// `λ'_j` for a single column, 1-based.
    pub fn column_len(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p >= j).count()
    }

    pub fn to_word(&self, shape: &RectShape) -> BorderWord {
        // the i-th d is preceded by λ_{n+1-i} letters r
        let mut letters = Vec::with_capacity(shape.len());
        let mut placed = 0;
        for &p in self.0.iter().rev() {
            letters.extend(std::iter::repeat_n(Letter::R, p - placed));
            letters.push(Letter::D);
            placed = p;
        }
        letters.extend(std::iter::repeat_n(Letter::R, shape.m - placed));
        BorderWord(letters)
    }

    pub fn to_shuffle(&self, shape: &RectShape) -> Shuffle {
        self.to_word(shape).to_shuffle(shape)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Diagram(parts)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// A step to the right.
    R,
    /// A step down.
    D,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'r',
            Letter::D => 'd',
        }
    }

    pub fn flip(self) -> Letter {
        match self {
            Letter::R => Letter::D,
            Letter::D => Letter::R,
        }
    }
}

/// A word over `{r, d}` with `m` letters `r` and `n` letters `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderWord(Vec<Letter>);

impl BorderWord {
    pub fn new(shape: &RectShape, letters: Vec<Letter>) -> Result<Self> {
        let rs = letters.iter().filter(|&&l| l == Letter::R).count();
        let ds = letters.len() - rs;
        if rs != shape.m || ds != shape.n {
            return Err(Error::InvalidWord(format!("expected {} r and {} d, got {rs} r and {ds} d", shape.m, shape.n)));
        }
        Ok(BorderWord(letters))
    }

    pub fn parse(shape: &RectShape, s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                'r' | 'R' => Ok(Letter::R),
                'd' | 'D' => Ok(Letter::D),
                other => Err(Error::Parse(format!("unexpected letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BorderWord::new(shape, letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Letter {
        self.0[0]
    }

    pub fn last(&self) -> Letter {
        self.0[self.0.len() - 1]
    }

    pub fn to_diagram(&self, shape: &RectShape) -> Diagram {
        let mut parts = vec![0; shape.n];
        let mut rs = 0;
        let mut seen_d = 0;
        for &l in &self.0 {
            match l {
                Letter::R => rs += 1,
                Letter::D => {
                    seen_d += 1;
                    parts[shape.n - seen_d] = rs;
                }
            }
        }
        Diagram(parts)
    }

    /// Replaces each `d` by the smallest unused unprimed symbol and each
    /// `r` by the smallest unused primed one.
    pub fn to_shuffle(&self, shape: &RectShape) -> Shuffle {
        let mut next_unprimed = 1;
        let mut next_primed = shape.n + 1;
        let entries = self
            .0
            .iter()
            .map(|l| match l {
                Letter::D => {
                    next_unprimed += 1;
                    next_unprimed - 1
                }
                Letter::R => {
                    next_primed += 1;
                    next_primed - 1
                }
            })
            .collect();
        Shuffle { n: shape.n, entries }
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        BorderWord(letters)
    }
}

impl fmt::Display for BorderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

/// A shuffle of `1..n` and `1'..m'`, in one-line notation. The primed
/// symbol `j'` is stored as `n + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shuffle {
    n: usize,
    entries: Vec<usize>,
}

impl Shuffle {
    pub fn new(shape: &RectShape, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != shape.len() {
            return Err(Error::InvalidShuffle(format!("expected {} entries, got {}", shape.len(), entries.len())));
        }
        let mut next_unprimed = 1;
        let mut next_primed = shape.n + 1;
        for &e in &entries {
            if e == next_unprimed && e <= shape.n {
                next_unprimed += 1;
            } else if e == next_primed && e > shape.n {
                next_primed += 1;
            } else {
                return Err(Error::InvalidShuffle(format!(
                    "{} is not a shuffle of 1..{} and 1'..{}'",
                    render_symbols(shape.n, &entries),
                    shape.n,
                    shape.m
                )));
            }
        }
        Ok(Shuffle { n: shape.n, entries })
    }

    /// Parses `1',1,2',3',2`.
    pub fn parse(shape: &RectShape, s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (digits, primed) = match tok.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                let v: usize = digits.parse().map_err(|e| Error::Parse(format!("symbol {tok:?}: {e}")))?;
                if v == 0 || (primed && v > shape.m) || (!primed && v > shape.n) {
                    return Err(Error::InvalidShuffle(format!("symbol {tok:?} out of range")));
                }
                Ok(if primed { shape.n + v } else { v })
            })
            .collect::<Result<Vec<_>>>()?;
        Shuffle::new(shape, entries)
    }

    /// The identity shuffle `(1, …, n, 1', …, m')`.
    pub fn identity(shape: &RectShape) -> Self {
        Shuffle { n: shape.n, entries: (1..=shape.len()).collect() }
    }

    /// Raw entries, primed `j'` stored as `n + j`.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_primed(&self, pos: usize) -> bool {
        self.entries[pos] > self.n
    }

    pub fn to_word(&self) -> BorderWord {
        BorderWord(self.entries.iter().map(|&e| if e <= self.n { Letter::D } else { Letter::R }).collect())
    }

    /// The `k`-th step of the path is down iff `σ(k) ≤ n`; the diagram
    /// is the set of boxes below the path.
    pub fn to_diagram(&self, shape: &RectShape) -> Diagram {
        let mut parts = vec![0; shape.n];
        let mut rights = 0;
        for &e in &self.entries {
            if e <= self.n {
                parts[shape.n - e] = rights;
            } else {
                rights += 1;
            }
        }
        Diagram(parts)
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<usize>) -> Self {
        Shuffle { n, entries }
    }

    pub(crate) fn rows(&self) -> usize {
        self.n
    }
}

fn render_symbols(n: usize, entries: &[usize]) -> String {
    entries.iter().map(|&e| if e <= n { e.to_string() } else { format!("{}'", e - n) }).join(",")
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_symbols(self.n, &self.entries))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A signed odd root `±(ε_i − δ_j)`. It names the morphism `ρ_{±α}`:
/// the positive sign adds the box `B(ε_i − δ_j)`, the negative sign
/// removes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddRoot {
    pub sign: Sign,
    pub i: usize,
    pub j: usize,
}

impl OddRoot {
    pub fn positive(i: usize, j: usize) -> Self {
        OddRoot { sign: Sign::Plus, i, j }
    }

    pub fn negative(i: usize, j: usize) -> Self {
        OddRoot { sign: Sign::Minus, i, j }
    }

    pub fn negate(self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        OddRoot { sign, ..self }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Plus
    }

    pub fn unsigned(self) -> Self {
        OddRoot { sign: Sign::Plus, ..self }
    }
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.is_positive() { '+' } else { '-' };
        write!(f, "{s}e{}-d{}", self.i, self.j)
    }
}

impl FromStr for OddRoot {
    type Err = Error;

    /// Accepts `+e1-d2`, `-e1-d2` and the unsigned `e1-d2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("root {s:?} is not of the form +e<i>-d<j>"));
        let t = s.trim();
        let (sign, rest) = match t.as_bytes().first() {
            Some(b'+') => (Sign::Plus, &t[1..]),
            Some(b'-') => (Sign::Minus, &t[1..]),
            _ => (Sign::Plus, t),
        };
        let rest = rest.strip_prefix('e').ok_or_else(bad)?;
        let (i, j) = rest.split_once("-d").ok_or_else(bad)?;
        let i = i.parse().map_err(|_| bad())?;
        let j = j.parse().map_err(|_| bad())?;
        if i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(OddRoot { sign, i, j })
    }
}
