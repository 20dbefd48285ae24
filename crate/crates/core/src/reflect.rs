//! Corners, the odd-reflection morphisms on the three encodings, simple
//! root sets, and the row/column operations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rect::{BorderWord, Diagram, Letter, OddRoot, RectShape, Shuffle, Sign};
use crate::root::GlobalRoot;

/// Addable (`outer`) and removable (`inner`) boxes, named by the positive
/// root of the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corners {
    pub outer: Vec<OddRoot>,
    pub inner: Vec<OddRoot>,
}

/// `B(ε_i − δ_j)` is addable: `λ_{n+1-i} = j − 1` and `λ'_j = n − i`.
pub fn is_outer_corner(shape: &RectShape, lambda: &Diagram, i: usize, j: usize) -> bool {
    lambda.row_len(i) + 1 == j && lambda.column_len(j) + i == shape.n()
}

/// `B(ε_i − δ_j)` is removable: `λ_{n+1-i} = j` and `λ'_j = n + 1 − i`.
pub fn is_inner_corner(shape: &RectShape, lambda: &Diagram, i: usize, j: usize) -> bool {
    lambda.row_len(i) == j && lambda.column_len(j) + i == shape.n() + 1
}

pub fn corners(shape: &RectShape, lambda: &Diagram) -> Corners {
    let outer = shape.positive_roots().filter(|r| is_outer_corner(shape, lambda, r.i, r.j)).collect();
    let inner = shape.positive_roots().filter(|r| is_inner_corner(shape, lambda, r.i, r.j)).collect();
    Corners { outer, inner }
}

/// Whether the morphism named by `root` is defined at `lambda`.
pub fn admits(shape: &RectShape, lambda: &Diagram, root: OddRoot) -> bool {
    match root.sign {
        Sign::Plus => is_outer_corner(shape, lambda, root.i, root.j),
        Sign::Minus => is_inner_corner(shape, lambda, root.i, root.j),
    }
}

impl Diagram {
    /// `t_ρ`: adds (`+α`) or removes (`−α`) the box of `α`.
    pub fn reflect(&self, shape: &RectShape, root: OddRoot) -> Result<Diagram> {
        shape.check_root(root)?;
        if !admits(shape, self, root) {
            return Err(Error::NotACorner { diagram: self.to_string(), root: root.to_string() });
        }
        let mut parts = self.parts().to_vec();
        let idx = shape.n() - root.i;
        match root.sign {
            Sign::Plus => parts[idx] += 1,
            Sign::Minus => parts[idx] -= 1,
        }
        Ok(Diagram::from_parts_unchecked(parts))
    }
}

/// Position `p` such that the morphism `root` swaps entries `p, p+1` of
/// the shuffle: `i, j'` for a positive root, `j', i` for a negative one.
pub(crate) fn simple_position(sigma: &Shuffle, root: OddRoot) -> Option<usize> {
    let unprimed = root.i;
    let primed = sigma.rows() + root.j;
    let (a, b) = match root.sign {
        Sign::Plus => (unprimed, primed),
        Sign::Minus => (primed, unprimed),
    };
    sigma.entries().windows(2).position(|w| w[0] == a && w[1] == b)
}

impl Shuffle {
    /// `r_ρ(σ) = (i, j')σ` when `i, j'` are adjacent in the required order.
    pub fn reflect(&self, shape: &RectShape, root: OddRoot) -> Result<Shuffle> {
        shape.check_root(root)?;
        let p = simple_position(self, root)
            .ok_or_else(|| Error::NotSimple { shuffle: self.to_string(), root: root.to_string() })?;
        let mut entries = self.entries().to_vec();
        entries.swap(p, p + 1);
        Ok(Shuffle::from_entries_unchecked(self.rows(), entries))
    }

    /// `ε_{σ(i)} − ε_{σ(i+1)}` for `i = 1..m+n−1`.
    pub fn simple_roots(&self, shape: &RectShape) -> SimpleRootSet {
        let roots = self
            .entries()
            .windows(2)
            .map(|w| &GlobalRoot::symbol(shape, w[0]) - &GlobalRoot::symbol(shape, w[1]))
            .collect();
        SimpleRootSet { roots }
    }
}

impl BorderWord {
    /// `p_ρ`: swaps the adjacent `d r` (positive) or `r d` (negative) pair
    /// sitting where `i, j'` are adjacent in the associated shuffle.
    pub fn reflect(&self, shape: &RectShape, root: OddRoot) -> Result<BorderWord> {
        shape.check_root(root)?;
        let sigma = self.to_shuffle(shape);
        let p = simple_position(&sigma, root)
            .ok_or_else(|| Error::NotSimple { shuffle: sigma.to_string(), root: root.to_string() })?;
        let mut letters = self.letters().to_vec();
        letters.swap(p, p + 1);
        Ok(BorderWord::from_letters_unchecked(letters))
    }
}

/// Ordered simple roots of a finite Borel subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleRootSet {
    pub roots: Vec<GlobalRoot>,
}

impl SimpleRootSet {
    pub fn odd_positions(&self) -> Vec<usize> {
        self.roots.iter().enumerate().filter(|(_, r)| r.is_isotropic()).map(|(p, _)| p).collect()
    }

    /// `θ`, the sum of the simple roots.
    pub fn highest_root(&self, shape: &RectShape) -> GlobalRoot {
        self.roots.iter().fold(GlobalRoot::zero(shape), |acc, r| &acc + r)
    }
}

impl fmt::Display for SimpleRootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, r) in self.roots.iter().enumerate() {
            if p > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Deleting or adding a full bottom row (`-r`, `+r`) or first column
/// (`-c`, `+c`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeOp {
    RowMinus,
    RowPlus,
    ColMinus,
    ColPlus,
}

impl EdgeOp {
    pub const ALL: [EdgeOp; 4] = [EdgeOp::RowMinus, EdgeOp::RowPlus, EdgeOp::ColMinus, EdgeOp::ColPlus];

    pub fn inverse(self) -> EdgeOp {
        match self {
            EdgeOp::RowMinus => EdgeOp::RowPlus,
            EdgeOp::RowPlus => EdgeOp::RowMinus,
            EdgeOp::ColMinus => EdgeOp::ColPlus,
            EdgeOp::ColPlus => EdgeOp::ColMinus,
        }
    }

    /// Change of rotation number that keeps `(λ, k)` in its class.
    pub fn rotation_shift(self, shape: &RectShape) -> i64 {
        let (n, m) = (shape.n() as i64, shape.m() as i64);
        match self {
            EdgeOp::RowMinus => m,
            EdgeOp::RowPlus => -m,
            EdgeOp::ColMinus => n,
            EdgeOp::ColPlus => -n,
        }
    }
}

impl fmt::Display for EdgeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeOp::RowMinus => "-r",
            EdgeOp::RowPlus => "+r",
            EdgeOp::ColMinus => "-c",
            EdgeOp::ColPlus => "+c",
        })
    }
}

impl FromStr for EdgeOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-r" => Ok(EdgeOp::RowMinus),
            "+r" => Ok(EdgeOp::RowPlus),
            "-c" => Ok(EdgeOp::ColMinus),
            "+c" => Ok(EdgeOp::ColPlus),
            other => Err(Error::Parse(format!("edge operation {other:?}"))),
        }
    }
}

fn not_eligible(op: EdgeOp, at: &impl fmt::Display) -> Error {
    Error::NotEligible { op: op.to_string(), at: at.to_string() }
}

impl Diagram {
    pub fn admits_edge(&self, shape: &RectShape, op: EdgeOp) -> bool {
        let p = self.parts();
        match op {
            EdgeOp::RowMinus => p[0] == shape.m(),
            EdgeOp::RowPlus => p[shape.n() - 1] == 0,
            EdgeOp::ColMinus => p[shape.n() - 1] >= 1,
            EdgeOp::ColPlus => p[0] < shape.m(),
        }
    }

    pub fn edge(&self, shape: &RectShape, op: EdgeOp) -> Result<Diagram> {
        if !self.admits_edge(shape, op) {
            return Err(not_eligible(op, self));
        }
        let p = self.parts();
        let parts = match op {
            EdgeOp::RowMinus => p[1..].iter().copied().chain([0]).collect(),
            EdgeOp::RowPlus => [shape.m()].into_iter().chain(p[..shape.n() - 1].iter().copied()).collect(),
            EdgeOp::ColMinus => p.iter().map(|x| x - 1).collect(),
            EdgeOp::ColPlus => p.iter().map(|x| x + 1).collect(),
        };
        Ok(Diagram::from_parts_unchecked(parts))
    }
}

impl BorderWord {
    pub fn admits_edge(&self, op: EdgeOp) -> bool {
        match op {
            EdgeOp::RowMinus => self.last() == Letter::D,
            EdgeOp::RowPlus => self.first() == Letter::D,
            EdgeOp::ColMinus => self.first() == Letter::R,
            EdgeOp::ColPlus => self.last() == Letter::R,
        }
    }

    /// `-r: xd ↦ dx`, `+r: dx ↦ xd`, `-c: rx ↦ xr`, `+c: xr ↦ rx`.
    pub fn edge(&self, op: EdgeOp) -> Result<BorderWord> {
        if !self.admits_edge(op) {
            return Err(not_eligible(op, self));
        }
        let mut letters = self.letters().to_vec();
        match op {
            EdgeOp::RowMinus | EdgeOp::ColPlus => letters.rotate_right(1),
            EdgeOp::RowPlus | EdgeOp::ColMinus => letters.rotate_left(1),
        }
        Ok(BorderWord::from_letters_unchecked(letters))
    }
}

impl Shuffle {
    pub fn admits_edge(&self, shape: &RectShape, op: EdgeOp) -> bool {
        let e = self.entries();
        let (n, len) = (shape.n(), shape.len());
        match op {
            EdgeOp::RowMinus => e[len - 1] == n,
            EdgeOp::RowPlus => e[0] == 1,
            EdgeOp::ColMinus => e[0] == n + 1,
            EdgeOp::ColPlus => e[len - 1] == len,
        }
    }

    /// Row moves relabel the unprimed symbols by `ν^{∓1}`, column moves
    /// relabel the primed symbols by `η^{±1}`; the moved symbol wraps to
    /// the other end.
    pub fn edge(&self, shape: &RectShape, op: EdgeOp) -> Result<Shuffle> {
        if !self.admits_edge(shape, op) {
            return Err(not_eligible(op, self));
        }
        let e = self.entries();
        let (n, len) = (shape.n(), shape.len());
        let shift_unprimed = |x: usize, by: isize| if x <= n { (x as isize + by) as usize } else { x };
        let shift_primed = |x: usize, by: isize| if x > n { (x as isize + by) as usize } else { x };
        let entries: Vec<usize> = match op {
            EdgeOp::RowMinus => [1].into_iter().chain(e[..len - 1].iter().map(|&x| shift_unprimed(x, 1))).collect(),
            EdgeOp::RowPlus => e[1..].iter().map(|&x| shift_unprimed(x, -1)).chain([n]).collect(),
            EdgeOp::ColMinus => e[1..].iter().map(|&x| shift_primed(x, -1)).chain([len]).collect(),
            EdgeOp::ColPlus => [n + 1].into_iter().chain(e[..len - 1].iter().map(|&x| shift_primed(x, 1))).collect(),
        };
        Ok(Shuffle::from_entries_unchecked(n, entries))
    }
}

/// Membership flags for the edge sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeFlags {
    /// `λ ∈ X(r−)`: bottom row full.
    pub row_minus: bool,
    /// `λ ∈ X(r+)`: top row empty.
    pub row_plus: bool,
    /// `λ ∈ X(c−)`: first column full.
    pub col_minus: bool,
    /// `λ ∈ X(c+)`: last column empty.
    pub col_plus: bool,
    /// The hook `(m, 1^{n-1})` is contained in `λ`.
    pub contains_hook: bool,
    /// `λ_n = λ'_m = 0`.
    pub reduced: bool,
}

pub fn edge_flags(shape: &RectShape, lambda: &Diagram) -> EdgeFlags {
    let row_minus = lambda.admits_edge(shape, EdgeOp::RowMinus);
    let row_plus = lambda.admits_edge(shape, EdgeOp::RowPlus);
    let col_minus = lambda.admits_edge(shape, EdgeOp::ColMinus);
    let col_plus = lambda.admits_edge(shape, EdgeOp::ColPlus);
    EdgeFlags {
        row_minus,
        row_plus,
        col_minus,
        col_plus,
        contains_hook: row_minus && col_minus,
        reduced: row_plus && col_plus,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PseudoCorners {
    /// `ε_n − δ_1` is an outer pseudo-corner.
    pub outer: bool,
    /// `ε_1 − δ_m` is an inner pseudo-corner.
    pub inner: bool,
}

pub fn pseudo_corners(shape: &RectShape, lambda: &Diagram) -> PseudoCorners {
    let f = edge_flags(shape, lambda);
    PseudoCorners { outer: f.contains_hook, inner: f.reduced }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s23() -> RectShape {
        RectShape::new(2, 3).unwrap()
    }

    fn d(s: &str) -> Diagram {
        Diagram::parse(&s23(), s).unwrap()
    }

    fn w(s: &str) -> BorderWord {
        BorderWord::parse(&s23(), s).unwrap()
    }

    fn sh(s: &str) -> Shuffle {
        Shuffle::parse(&s23(), s).unwrap()
    }

    #[test]
    fn corner_examples() {
        let s = s23();
        let c = corners(&s, &d("3,1"));
        assert_eq!(c.outer, vec![OddRoot::positive(1, 2)]);
        assert_eq!(c.inner, vec![OddRoot::positive(1, 1), OddRoot::positive(2, 3)]);
        let c = corners(&s, &s.empty());
        assert_eq!(c.outer, vec![OddRoot::positive(2, 1)]);
        assert!(c.inner.is_empty());
        let c = corners(&s, &s.full());
        assert!(c.outer.is_empty());
        assert_eq!(c.inner, vec![OddRoot::positive(1, 3)]);
    }

    #[test]
    fn t_examples() {
        let s = s23();
        assert_eq!(d("3,1").reflect(&s, OddRoot::positive(1, 2)).unwrap(), d("3,2"));
        assert_eq!(d("1,1").reflect(&s, OddRoot::negative(1, 1)).unwrap(), d("1,0"));
        assert!(matches!(s.empty().reflect(&s, OddRoot::positive(1, 1)), Err(Error::NotACorner { .. })));
        assert!(matches!(s.empty().reflect(&s, OddRoot::positive(3, 1)), Err(Error::InvalidRoot(_))));
    }

    #[test]
    fn p_examples() {
        let s = s23();
        assert_eq!(w("rdrrd").reflect(&s, OddRoot::positive(1, 2)).unwrap(), w("rrdrd"));
        assert_eq!(w("ddrrr").reflect(&s, OddRoot::positive(2, 1)).unwrap(), w("drdrr"));
        assert!(matches!(w("ddrrr").reflect(&s, OddRoot::positive(1, 1)), Err(Error::NotSimple { .. })));
    }

    #[test]
    fn r_examples() {
        let s = s23();
        let a = OddRoot::positive(1, 2);
        assert_eq!(sh("1',1,2',3',2").reflect(&s, a).unwrap(), sh("1',2',1,3',2"));
        assert_eq!(sh("1',2',1,3',2").reflect(&s, a.negate()).unwrap(), sh("1',1,2',3',2"));
        assert_eq!(Shuffle::identity(&s).reflect(&s, OddRoot::positive(2, 1)).unwrap(), sh("1,1',2,2',3'"));
    }

    #[test]
    fn simple_root_examples() {
        let s = s23();
        let render = |x: &Shuffle, shape: &RectShape| x.simple_roots(shape).to_string();
        assert_eq!(render(&Shuffle::identity(&s), &s), "e1 - e2, -d1 + e2, d1 - d2, d2 - d3");
        assert_eq!(render(&sh("1',1,2',3',2"), &s), "d1 - e1, -d2 + e1, d2 - d3, d3 - e2");
        let s34 = RectShape::new(3, 4).unwrap();
        let hook = s34.hook().to_shuffle(&s34);
        assert_eq!(render(&hook, &s34), "d1 - e1, e1 - e2, -d2 + e2, d2 - d3, d3 - d4, d4 - e3");
        assert_eq!(hook.simple_roots(&s34).odd_positions(), vec![0, 2, 5]);
    }

    #[test]
    fn edge_examples() {
        let s = s23();
        assert_eq!(d("3,1").edge(&s, EdgeOp::RowMinus).unwrap(), d("1,0"));
        assert_eq!(w("rdrrd").edge(EdgeOp::RowMinus).unwrap(), w("drdrr"));
        assert_eq!(s.empty().edge(&s, EdgeOp::RowPlus).unwrap(), d("3,0"));
        assert_eq!(w("ddrrr").edge(EdgeOp::RowPlus).unwrap(), w("drrrd"));
        assert_eq!(d("1,1").edge(&s, EdgeOp::ColMinus).unwrap(), s.empty());
        assert!(matches!(d("2,1").edge(&s, EdgeOp::RowMinus), Err(Error::NotEligible { .. })));
        assert!(w("ddrrr").edge(EdgeOp::ColMinus).is_err());
    }

    #[test]
    fn pseudo_corner_examples() {
        let s = s23();
        assert_eq!(pseudo_corners(&s, &d("3,1")), PseudoCorners { outer: true, inner: false });
        assert_eq!(pseudo_corners(&s, &s.empty()), PseudoCorners { outer: false, inner: true });
        assert_eq!(pseudo_corners(&s, &d("3,0")), PseudoCorners { outer: false, inner: false });
    }

    #[test]
    fn edge_flag_unions_cover_everything() {
        for (n, m) in [(1, 1), (2, 3), (3, 2), (1, 4), (3, 3)] {
            let s = RectShape::new(n, m).unwrap();
            for l in s.diagrams() {
                let f = edge_flags(&s, &l);
                assert!(f.row_plus || f.col_minus);
                assert!(f.col_plus || f.row_minus);
            }
        }
    }

    #[test]
    fn edge_op_text() {
        for op in EdgeOp::ALL {
            assert_eq!(op.to_string().parse::<EdgeOp>().unwrap(), op);
            assert_eq!(op.inverse().inverse(), op);
        }
    }
}
