//! Classes of `X × Z` under row and column deletion, and the extended
//! odd-reflection action on them.
//!
//! Two pairs are equivalent when one is reached from the other by
//! `(λ, k) ~ (λ^{-r}, k + m)` for a full bottom row or
//! `(λ, k) ~ (λ^{-c}, k + n)` for a full first column. For coprime
//! `(n, m)` every class has exactly `m + n` members, visited by rotating
//! the border word one letter at a time.
//!
//! The construction is written once over [`Carrier`], so the same code
//! runs on diagrams, border words and shuffles.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rect::{BorderWord, Diagram, OddRoot, RectShape, Shuffle};
use crate::reflect::{pseudo_corners, EdgeOp};

/// A set acted on by odd reflections and by the row/column moves.
pub trait Carrier: Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display {
    fn from_diagram(shape: &RectShape, lambda: &Diagram) -> Self;
    fn to_diagram(&self, shape: &RectShape) -> Diagram;
    fn admits_edge(&self, shape: &RectShape, op: EdgeOp) -> bool;
    fn apply_edge(&self, shape: &RectShape, op: EdgeOp) -> Result<Self>;
    fn apply_root(&self, shape: &RectShape, root: OddRoot) -> Result<Self>;
}

impl Carrier for Diagram {
    fn from_diagram(_: &RectShape, lambda: &Diagram) -> Self {
        lambda.clone()
    }
    fn to_diagram(&self, _: &RectShape) -> Diagram {
        self.clone()
    }
    fn admits_edge(&self, shape: &RectShape, op: EdgeOp) -> bool {
        Diagram::admits_edge(self, shape, op)
    }
    fn apply_edge(&self, shape: &RectShape, op: EdgeOp) -> Result<Self> {
        self.edge(shape, op)
    }
    fn apply_root(&self, shape: &RectShape, root: OddRoot) -> Result<Self> {
        self.reflect(shape, root)
    }
}

impl Carrier for BorderWord {
    fn from_diagram(shape: &RectShape, lambda: &Diagram) -> Self {
        lambda.to_word(shape)
    }
    fn to_diagram(&self, shape: &RectShape) -> Diagram {
        BorderWord::to_diagram(self, shape)
    }
    fn admits_edge(&self, _: &RectShape, op: EdgeOp) -> bool {
        BorderWord::admits_edge(self, op)
    }
    fn apply_edge(&self, _: &RectShape, op: EdgeOp) -> Result<Self> {
        self.edge(op)
    }
    fn apply_root(&self, shape: &RectShape, root: OddRoot) -> Result<Self> {
        self.reflect(shape, root)
    }
}

impl Carrier for Shuffle {
    fn from_diagram(shape: &RectShape, lambda: &Diagram) -> Self {
        lambda.to_shuffle(shape)
    }
    fn to_diagram(&self, shape: &RectShape) -> Diagram {
        Shuffle::to_diagram(self, shape)
    }
    fn admits_edge(&self, shape: &RectShape, op: EdgeOp) -> bool {
        Shuffle::admits_edge(self, shape, op)
    }
    fn apply_edge(&self, shape: &RectShape, op: EdgeOp) -> Result<Self> {
        self.edge(shape, op)
    }
    fn apply_root(&self, shape: &RectShape, root: OddRoot) -> Result<Self> {
        self.reflect(shape, root)
    }
}

/// An element paired with its rotation number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Anchored<C> {
    pub item: C,
    pub k: i64,
}

pub type AnchoredPair = Anchored<Diagram>;

impl<C: Carrier> Anchored<C> {
    pub fn new(item: C, k: i64) -> Self {
        Anchored { item, k }
    }

    /// `|λ| + k`.
    pub fn degree(&self, shape: &RectShape) -> i64 {
        self.item.to_diagram(shape).size() as i64 + self.k
    }

    /// Applies a row/column move together with its rotation shift.
    pub fn edge(&self, shape: &RectShape, op: EdgeOp) -> Result<Self> {
        Ok(Anchored { item: self.item.apply_edge(shape, op)?, k: self.k + op.rotation_shift(shape) })
    }

    pub fn map<D: Carrier>(&self, shape: &RectShape) -> Anchored<D> {
        Anchored { item: D::from_diagram(shape, &self.item.to_diagram(shape)), k: self.k }
    }

    /// The next member in rotation order: `dx ↦ xd` with `k − m`, or
    /// `rx ↦ xr` with `k + n`.
    fn rotate(&self, shape: &RectShape) -> Self {
        let op = if self.item.admits_edge(shape, EdgeOp::RowPlus) { EdgeOp::RowPlus } else { EdgeOp::ColMinus };
        self.edge(shape, op).expect("every word starts with r or d")
    }
}

impl<C: fmt::Display> fmt::Display for Anchored<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{}", self.item, self.k)
    }
}

/// An equivalence class, stored as its `m + n` members in rotation order
/// starting from the member with the smallest rotation number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Class<C> {
    reps: Vec<Anchored<C>>,
}

pub type OrbitClass = Class<Diagram>;

impl<C: Carrier> Class<C> {
    /// The member with minimal `k`.
    pub fn canonical(&self) -> &Anchored<C> {
        &self.reps[0]
    }

    pub fn reps(&self) -> &[Anchored<C>] {
        &self.reps
    }

    pub fn degree(&self, shape: &RectShape) -> i64 {
        self.reps[0].degree(shape)
    }

    pub fn contains(&self, p: &Anchored<C>) -> bool {
        self.reps.contains(p)
    }

    /// The member used for labels: `k` a multiple of `m` if possible, then
    /// smallest `|k|`, preferring `k ≥ 0`.
    pub fn display_rep(&self, shape: &RectShape) -> &Anchored<C> {
        let m = shape.m() as i64;
        self.reps.iter().min_by_key(|r| (r.k.rem_euclid(m) != 0, r.k.abs(), r.k < 0)).expect("classes are non-empty")
    }

    pub fn map<D: Carrier>(&self, shape: &RectShape) -> Class<D> {
        Class { reps: self.reps.iter().map(|r| r.map(shape)).collect() }
    }

    /// Shifts every rotation number by `shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Class { reps: self.reps.iter().map(|r| Anchored { item: r.item.clone(), k: r.k + shift }).collect() }
    }
}

impl<C: fmt::Display> fmt::Display for Class<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.reps[0].item, self.reps[0].k)
    }
}

/// Members `(w_i, k_i)` obtained by rotating the word, in order.
pub fn rotation_orbit<C: Carrier>(shape: &RectShape, p: &Anchored<C>) -> Vec<Anchored<C>> {
    let mut out = Vec::with_capacity(shape.len());
    let mut cur = p.clone();
    for _ in 0..shape.len() {
        let next = cur.rotate(shape);
        out.push(cur);
        cur = next;
    }
    debug_assert_eq!(&cur, p);
    out
}

pub fn enumerate_class<C: Carrier>(shape: &RectShape, p: &Anchored<C>) -> Result<Class<C>> {
    shape.require_class_shape()?;
    let mut reps = rotation_orbit(shape, p);
    let start = reps.iter().enumerate().min_by_key(|(_, r)| r.k).map(|(i, _)| i).unwrap_or(0);
    reps.rotate_left(start);
    Ok(Class { reps })
}

/// The rotated root `η^i ν^j ρ` used at rotation number `k = in + jm`.
pub fn local_root(shape: &RectShape, root: OddRoot, k: i64) -> Result<OddRoot> {
    let (i, j) = shape.solve_rotation(k)?;
    Ok(shape.rotate_root(root, i as i64, j as i64))
}

/// Every member that admits the rotated root, with the class it is sent to.
pub fn act_all<C: Carrier>(shape: &RectShape, cls: &Class<C>, root: OddRoot) -> Result<Vec<(usize, Class<C>)>> {
    shape.require_class_shape()?;
    shape.check_root(root)?;
    let mut out = Vec::new();
    for (idx, rep) in cls.reps.iter().enumerate() {
        let beta = local_root(shape, root, rep.k)?;
        if let Ok(item) = rep.item.apply_root(shape, beta) {
            out.push((idx, enumerate_class(shape, &Anchored { item, k: rep.k })?));
        }
    }
    Ok(out)
}

/// The extended action of `ρ` on a class. The first member (in rotation
/// order) admitting the rotated root is used.
pub fn act<C: Carrier>(shape: &RectShape, cls: &Class<C>, root: OddRoot) -> Result<Class<C>> {
    shape.require_class_shape()?;
    shape.check_root(root)?;
    for rep in &cls.reps {
        let beta = local_root(shape, root, rep.k)?;
        if let Ok(item) = rep.item.apply_root(shape, beta) {
            return enumerate_class(shape, &Anchored { item, k: rep.k });
        }
    }
    Err(Error::Undefined { class: cls.to_string(), root: root.to_string() })
}

/// All classes of a given degree, sorted by canonical member.
pub fn classes_at_degree_of<C: Carrier>(shape: &RectShape, degree: i64) -> Result<Vec<Class<C>>> {
    shape.require_class_shape()?;
    let mut seen = BTreeSet::new();
    for lambda in shape.diagrams() {
        let k = degree - lambda.size() as i64;
        let p = Anchored { item: C::from_diagram(shape, &lambda), k };
        seen.insert(enumerate_class(shape, &p)?);
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.canonical().k, &a.canonical().item).cmp(&(b.canonical().k, &b.canonical().item)));
    Ok(out)
}

pub fn classes_at_degree(shape: &RectShape, degree: i64) -> Result<Vec<OrbitClass>> {
    classes_at_degree_of(shape, degree)
}

/// Splits a class into the finer classes generated by row moves alone.
///
/// The members are re-anchored at the first one whose word ends in `r`;
/// part `j` collects the members with `k_i − k_0 ≡ nj (mod m)`.
pub fn approx_decompose<C: Carrier>(shape: &RectShape, cls: &Class<C>) -> Result<Vec<Vec<Anchored<C>>>> {
    shape.require_class_shape()?;
    let reps = cls.reps();
    let anchor = reps
        .iter()
        .position(|r| r.item.admits_edge(shape, EdgeOp::ColPlus))
        .expect("some rotation of a word ends in r");
    let (n, m) = (shape.n() as i64, shape.m() as i64);
    let inv_n = n.extended_gcd(&m).x.rem_euclid(m);
    let k0 = reps[anchor].k;
    let mut parts = vec![Vec::new(); shape.m()];
    for t in 0..reps.len() {
        let rep = &reps[(anchor + t) % reps.len()];
        let j = ((rep.k - k0).rem_euclid(m) * inv_n).rem_euclid(m);
        parts[j as usize].push(rep.clone());
    }
    Ok(parts)
}

/// Result of checking the map `[X × mZ]_≈ → [X × Z]` on a degree window.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VssReport {
    pub approx_classes: usize,
    pub classes: usize,
    pub edges_checked: usize,
    pub violations: Vec<String>,
}

impl VssReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Closure of `p` under `(λ, k) ≈ (λ^{-r}, k + m)` and its inverse.
fn approx_closure(shape: &RectShape, p: &AnchoredPair) -> BTreeSet<AnchoredPair> {
    let mut seen = BTreeSet::from([p.clone()]);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(cur) = queue.pop_front() {
        for op in [EdgeOp::RowMinus, EdgeOp::RowPlus] {
            if let Ok(next) = cur.edge(shape, op) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Checks that `[λ, mℓ]_≈ ↦ [λ, mℓ]` is a well-defined bijection on the
/// window that commutes with every signed root.
pub fn vss_check(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<VssReport> {
    shape.require_class_shape()?;
    let m = shape.m() as i64;
    let mut report = VssReport::default();

    let mut approx: Vec<BTreeSet<AnchoredPair>> = Vec::new();
    let mut placed = HashSet::new();
    for d in degrees.clone() {
        for lambda in shape.diagrams() {
            let k = d - lambda.size() as i64;
            if k.rem_euclid(m) != 0 {
                continue;
            }
            let p = Anchored { item: lambda, k };
            if placed.contains(&p) {
                continue;
            }
            let cls = approx_closure(shape, &p);
            placed.extend(cls.iter().cloned());
            approx.push(cls);
        }
    }
    report.approx_classes = approx.len();

    let mut image = BTreeSet::new();
    let mut images = Vec::with_capacity(approx.len());
    for cls in &approx {
        let targets: BTreeSet<_> = cls.iter().map(|p| enumerate_class(shape, p)).collect::<Result<_>>()?;
        if targets.len() != 1 {
            report.violations.push(format!("≈-class of {} maps to {} classes", first(cls), targets.len()));
        }
        let t = targets.into_iter().next().expect("non-empty");
        if !image.insert(t.clone()) {
            report.violations.push(format!("not injective at {t}"));
        }
        images.push(t);
    }

    let mut expected = BTreeSet::new();
    for d in degrees {
        expected.extend(classes_at_degree(shape, d)?);
    }
    report.classes = expected.len();
    for missing in expected.difference(&image) {
        report.violations.push(format!("not surjective: {missing} has no preimage"));
    }

    for (cls, img) in approx.iter().zip(&images) {
        for root in shape.signed_roots() {
            report.edges_checked += 1;
            let mut targets = BTreeSet::new();
            for p in cls {
                let beta = local_root(shape, root, p.k)?;
                if let Ok(item) = p.item.reflect(shape, beta) {
                    let t = approx_closure(shape, &Anchored { item, k: p.k });
                    targets.insert(t.into_iter().next().expect("non-empty"));
                }
            }
            if targets.len() > 1 {
                report.violations.push(format!("≈-action of {root} on {} is ambiguous", first(cls)));
                continue;
            }
            let via_sim = act(shape, img, root).ok();
            let via_approx = match targets.into_iter().next() {
                Some(t) => Some(enumerate_class(shape, &t)?),
                None => None,
            };
            if via_sim != via_approx {
                report.violations.push(format!(
                    "{root} on {}: ≈ gives {:?}, ~ gives {:?}",
                    first(cls),
                    via_approx.map(|c| c.to_string()),
                    via_sim.map(|c| c.to_string())
                ));
            }
        }
    }
    Ok(report)
}

fn first(cls: &BTreeSet<AnchoredPair>) -> String {
    cls.iter().next().map(|p| p.to_string()).unwrap_or_default()
}

/// The action of the outer pseudo-corner `ε_n − δ_1` on `[λ, 0]` computed
/// through the row move: `[t_{ε_1−δ_1}(λ^{-r}), m]`.
pub fn outer_pseudo_corner_image(shape: &RectShape, lambda: &Diagram) -> Option<AnchoredPair> {
    if !pseudo_corners(shape, lambda).outer {
        return None;
    }
    let below = lambda.edge(shape, EdgeOp::RowMinus).ok()?;
    let item = below.reflect(shape, OddRoot::positive(1, 1)).ok()?;
    Some(Anchored { item, k: shape.m() as i64 })
}

/// The action of `−(ε_1 − δ_m)` at an inner pseudo-corner of `[λ, 0]`
/// through the row move: `[t_{−(ε_n−δ_m)}(λ^{+r}), −m]`.
pub fn inner_pseudo_corner_image(shape: &RectShape, lambda: &Diagram) -> Option<AnchoredPair> {
    if !pseudo_corners(shape, lambda).inner {
        return None;
    }
    let above = lambda.edge(shape, EdgeOp::RowPlus).ok()?;
    let item = above.reflect(shape, OddRoot::negative(shape.n(), shape.m())).ok()?;
    Some(Anchored { item, k: -(shape.m() as i64) })
}
