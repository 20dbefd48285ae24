//! Exhaustive property checks over a shape and a degree window.
//!
//! Each check returns a [`PropertyResult`] naming what was checked, how
//! many instances were looked at and every violation found.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::affine::{affine_reflect, deleted_index, dta_words, extend, node_move, BorelAtlas};
use crate::error::{Error, Result};
use crate::orbit::{
    act, act_all, approx_decompose, classes_at_degree, classes_at_degree_of, enumerate_class, local_root, vss_check,
    Anchored, OrbitClass,
};
use crate::rect::{binomial, BorderWord, Diagram, OddRoot, RectShape, Shuffle};
use crate::reflect::{corners, edge_flags, EdgeOp};
use crate::root::GlobalRoot;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl PropertyResult {
    fn new(name: &'static str) -> Self {
        PropertyResult { name, checked: 0, violations: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<28} {:>7} checked", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} violations (first: {})", self.violations.len(), self.violations[0])?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// `t`, `p` and `r` agree under `λ ↦ w(λ) ↦ sh(w(λ))`, and `sh ∘ p = r ∘ sh`.
pub fn commuting_squares(shape: &RectShape) -> PropertyResult {
    let mut res = PropertyResult::new("commuting-squares");
    for lambda in shape.diagrams() {
        let w = lambda.to_word(shape);
        let sigma = w.to_shuffle(shape);
        for root in shape.signed_roots() {
            let t = lambda.reflect(shape, root).ok();
            let p = w.reflect(shape, root).ok();
            let r = sigma.reflect(shape, root).ok();
            res.check(t.is_some() == p.is_some() && p.is_some() == r.is_some(), || {
                format!("{root} at {lambda}: domains differ")
            });
            if let (Some(t), Some(p), Some(r)) = (t, p, r) {
                res.check(t.to_word(shape) == p, || format!("w(t {root} {lambda}) != p(w)"));
                res.check(p.to_shuffle(shape) == r, || format!("sh(p {root} {w}) != r(sh)"));
            }
        }
    }
    res
}

/// `t_{−α} t_{+α} = id` on every carrier.
pub fn involution(shape: &RectShape) -> PropertyResult {
    let mut res = PropertyResult::new("involution");
    for lambda in shape.diagrams() {
        let w = lambda.to_word(shape);
        let sigma = w.to_shuffle(shape);
        for root in shape.signed_roots() {
            if let Ok(t) = lambda.reflect(shape, root) {
                res.check(t.reflect(shape, root.negate()).as_ref() == Ok(&lambda), || {
                    format!("t of {root} at {lambda} not undone")
                });
            }
            if let Ok(p) = w.reflect(shape, root) {
                res.check(p.reflect(shape, root.negate()).as_ref() == Ok(&w), || {
                    format!("p of {root} at {w} not undone")
                });
            }
            if let Ok(r) = sigma.reflect(shape, root) {
                res.check(r.reflect(shape, root.negate()).as_ref() == Ok(&sigma), || {
                    format!("r of {root} at {sigma} not undone")
                });
            }
        }
    }
    res
}

/// Corners are disjoint, edge moves are mutually inverse, and every diagram
/// lies in `X(r+) ∪ X(c−)` and `X(c+) ∪ X(r−)`.
pub fn edge_structure(shape: &RectShape) -> PropertyResult {
    let mut res = PropertyResult::new("edge-structure");
    for lambda in shape.diagrams() {
        let c = corners(shape, &lambda);
        res.check(c.outer.iter().all(|r| !c.inner.contains(r)), || format!("corners of {lambda} overlap"));
        let f = edge_flags(shape, &lambda);
        res.check(f.row_plus || f.col_minus, || format!("{lambda} in neither X(r+) nor X(c-)"));
        res.check(f.col_plus || f.row_minus, || format!("{lambda} in neither X(c+) nor X(r-)"));
        let w = lambda.to_word(shape);
        for op in EdgeOp::ALL {
            if let Ok(mu) = lambda.edge(shape, op) {
                res.check(mu.edge(shape, op.inverse()).as_ref() == Ok(&lambda), || {
                    format!("{op} then {} at {lambda}", op.inverse())
                });
                res.check(w.edge(op).ok() == Some(mu.to_word(shape)), || format!("word form of {op} at {lambda}"));
                res.check(lambda.to_shuffle(shape).edge(shape, op).ok() == Some(mu.to_shuffle(shape)), || {
                    format!("shuffle form of {op} at {lambda}")
                });
            }
        }
    }
    res
}

fn compat(shape: &RectShape, name: &'static str, op: EdgeOp, shift: (i64, i64)) -> PropertyResult {
    let mut res = PropertyResult::new(name);
    for lambda in shape.diagrams() {
        let Ok(below) = lambda.edge(shape, op) else { continue };
        for beta in shape.signed_roots() {
            let Ok(t) = lambda.reflect(shape, beta) else { continue };
            let Ok(lhs) = t.edge(shape, op) else { continue };
            let moved = shape.rotate_root(beta, shift.0, shift.1);
            res.check(below.reflect(shape, moved).as_ref() == Ok(&lhs), || {
                format!("t then {op} at {lambda} with {beta}")
            });
            let w = lambda.to_word(shape);
            let pw = w.reflect(shape, beta).and_then(|x| x.edge(op));
            let wp = w.edge(op).and_then(|x| x.reflect(shape, moved));
            res.check(pw.is_ok() && pw == wp, || format!("p then {op} at {w} with {beta}"));
            let s = lambda.to_shuffle(shape);
            let rs = s.reflect(shape, beta).and_then(|x| x.edge(shape, op));
            let sr = s.edge(shape, op).and_then(|x| x.reflect(shape, moved));
            res.check(rs.is_ok() && rs == sr, || format!("r then {op} at {s} with {beta}"));
        }
    }
    res
}

/// Deleting the bottom row intertwines `β` with `νβ`.
pub fn row_compatibility(shape: &RectShape) -> PropertyResult {
    compat(shape, "row-compatibility", EdgeOp::RowMinus, (0, 1))
}

/// Deleting the first column intertwines `β` with `ηβ`.
pub fn column_compatibility(shape: &RectShape) -> PropertyResult {
    compat(shape, "column-compatibility", EdgeOp::ColMinus, (1, 0))
}

/// Every class in `degrees` has `m + n` members of one degree whose
/// rotation numbers are distinct modulo `m + n` (each step changes `k` by
/// `n` or `−m`), and is closed under the generating moves.
pub fn class_anatomy(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("class-anatomy");
    let len = shape.len() as i64;
    for d in degrees {
        for cls in classes_at_degree(shape, d)? {
            let reps = cls.reps();
            res.check(reps.len() == shape.len(), || format!("{cls} has {} members", reps.len()));
            let residues: BTreeSet<i64> = reps.iter().map(|r| r.k.rem_euclid(len)).collect();
            res.check(residues.len() == reps.len(), || format!("{cls}: rotation numbers collide mod {len}"));
            res.check(reps.iter().all(|r| r.degree(shape) == d), || format!("{cls}: mixed degrees"));
            res.check(reps.iter().all(|r| r.k >= cls.canonical().k), || format!("{cls}: canonical not minimal"));
            let closed =
                reps.iter().all(|r| EdgeOp::ALL.iter().all(|&op| r.edge(shape, op).map_or(true, |q| cls.contains(&q))));
            res.check(closed, || format!("{cls} not closed under the moves"));
        }
    }
    Ok(res)
}

/// `|[X × Z]_d| = C(m+n, n)/(m+n)` and `d ↦ d + mn` shifts classes.
pub fn class_count(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("class-count");
    let want = binomial(shape.len(), shape.n()) / shape.len();
    let mn = (shape.n() * shape.m()) as i64;
    for d in degrees {
        let here = classes_at_degree(shape, d)?;
        res.check(here.len() == want, || format!("degree {d}: {} classes, expected {want}", here.len()));
        let shifted: BTreeSet<OrbitClass> = here.iter().map(|c| c.shifted(mn)).collect();
        let there: BTreeSet<OrbitClass> = classes_at_degree(shape, d + mn)?.into_iter().collect();
        res.check(shifted == there, || format!("degree {d} does not shift onto degree {}", d + mn));
    }
    Ok(res)
}

/// All members admitting the rotated root send the class to the same
/// target, and on `k = 0` members the action is the plain one.
pub fn well_defined_action(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("well-defined-action");
    for d in degrees {
        for cls in classes_at_degree(shape, d)? {
            for root in shape.signed_roots() {
                let targets: BTreeSet<OrbitClass> = act_all(shape, &cls, root)?.into_iter().map(|(_, c)| c).collect();
                res.check(targets.len() <= 1, || format!("{root} on {cls}: {} targets", targets.len()));
                if let Some(t) = targets.iter().next() {
                    let expected = if root.is_positive() { d + 1 } else { d - 1 };
                    res.check(t.degree(shape) == expected, || format!("{root} on {cls}: wrong degree"));
                }
                for rep in cls.reps().iter().filter(|r| r.k == 0) {
                    if let Ok(mu) = rep.item.reflect(shape, root) {
                        let plain = enumerate_class(shape, &Anchored::new(mu, 0))?;
                        res.check(targets.contains(&plain), || format!("{root} on {cls}: not the plain action at k=0"));
                    }
                }
            }
        }
    }
    Ok(res)
}

/// `λ ↦ [λ, 0]` is injective.
pub fn embedding(shape: &RectShape) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("embedding");
    let mut seen = BTreeMap::new();
    for lambda in shape.diagrams() {
        let cls = enumerate_class(shape, &Anchored::new(lambda.clone(), 0))?;
        let prev = seen.insert(cls.clone(), lambda.clone());
        res.check(prev.is_none(), || format!("{lambda} and {} share {cls}", prev.clone().unwrap()));
    }
    Ok(res)
}

/// The construction over words and shuffles agrees with the one over
/// diagrams, for classes and for the action.
pub fn carriers(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("carriers");
    for d in degrees {
        let cd = classes_at_degree(shape, d)?;
        let cw: Vec<OrbitClass> = classes_at_degree_of::<BorderWord>(shape, d)?.iter().map(|c| c.map(shape)).collect();
        let cs: Vec<OrbitClass> = classes_at_degree_of::<Shuffle>(shape, d)?.iter().map(|c| c.map(shape)).collect();
        let sd: BTreeSet<_> = cd.iter().cloned().collect();
        res.check(sd == cw.into_iter().collect(), || format!("degree {d}: word classes differ"));
        res.check(sd == cs.into_iter().collect(), || format!("degree {d}: shuffle classes differ"));
        for cls in &cd {
            let w = cls.map::<BorderWord>(shape);
            let s = cls.map::<Shuffle>(shape);
            for root in shape.signed_roots() {
                let a = act(shape, cls, root).ok();
                let b = act(shape, &w, root).ok().map(|c| c.map::<Diagram>(shape));
                let c = act(shape, &s, root).ok().map(|c| c.map::<Diagram>(shape));
                res.check(a == b && b == c, || format!("{root} on {cls}: carriers disagree"));
            }
        }
    }
    Ok(res)
}

/// Each class splits into exactly `m` nonempty row-move classes, matching
/// the closure under `(λ, k) ≈ (λ^{-r}, k + m)`.
pub fn approx_parts(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("approx-decomposition");
    for d in degrees {
        for cls in classes_at_degree(shape, d)? {
            let parts = approx_decompose(shape, &cls)?;
            res.check(parts.len() == shape.m() && parts.iter().all(|p| !p.is_empty()), || {
                format!("{cls}: parts of sizes {:?}", parts.iter().map(Vec::len).collect::<Vec<_>>())
            });
            for part in &parts {
                let closed = part.iter().all(|p| {
                    [EdgeOp::RowMinus, EdgeOp::RowPlus]
                        .iter()
                        .all(|&op| p.edge(shape, op).map_or(true, |q| part.contains(&q)))
                });
                res.check(closed, || format!("{cls}: a part is not closed under row moves"));
                let first = &part[0];
                let reached: BTreeSet<_> = std::iter::successors(Some(first.clone()), |p| {
                    p.edge(shape, EdgeOp::RowMinus).ok().filter(|q| q != first)
                })
                .take(shape.len())
                .chain(
                    std::iter::successors(Some(first.clone()), |p| {
                        p.edge(shape, EdgeOp::RowPlus).ok().filter(|q| q != first)
                    })
                    .take(shape.len()),
                )
                .collect();
                res.check(reached.len() == part.len(), || format!("{cls}: a part is not connected by row moves"));
            }
        }
    }
    Ok(res)
}

pub fn vss(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<PropertyResult> {
    let mut res = PropertyResult::new("vss-bijection");
    let r = vss_check(shape, degrees)?;
    res.checked = r.approx_classes + r.edges_checked;
    res.check(r.approx_classes == r.classes, || format!("{} ≈-classes vs {} classes", r.approx_classes, r.classes));
    res.violations.extend(r.violations);
    Ok(res)
}

/// The affine Borel of every class in the window: node sums, Gram rows,
/// grey parity, words, injectivity, inverse and equivariance.
pub fn borel_suite(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<Vec<PropertyResult>> {
    let atlas = BorelAtlas::build(shape, degrees.clone())?;
    let dbar = GlobalRoot::dbar(shape);
    let mut sums = PropertyResult::new("node-sum");
    let mut gram = PropertyResult::new("gram-row-sums");
    let mut greys = PropertyResult::new("grey-parity");
    let mut words = PropertyResult::new("dta-words");
    let mut local = PropertyResult::new("local-names");
    let mut inj = PropertyResult::new("borel-injective");
    let mut inverse = PropertyResult::new("borel-inverse");
    let mut equi = PropertyResult::new("borel-equivariant");
    let mut moves = PropertyResult::new("extension-well-defined");

    let mut sorted_sets = BTreeMap::new();
    for d in degrees {
        for cls in classes_at_degree(shape, d)? {
            let dk = atlas.affine_borel(&cls)?;
            sums.check(dk.node_sum() == dbar, || format!("{cls}: node sum {}", dk.node_sum()));
            let g = dk.gram();
            let diag_ok = (0..g.len()).all(|i| [2, -2, 0].contains(&g[i][i]) && (g[i][i] == 0) == dk.is_grey(i));
            gram.check(g.iter().all(|row| row.iter().sum::<i64>() == 0) && diag_ok, || format!("{cls}: Gram"));
            greys.check(!dk.greys().is_empty() && dk.greys().len() % 2 == 0, || format!("{cls}: grey count"));

            let prev = sorted_sets.insert(dk.sorted_roots(), cls.clone());
            inj.check(prev.is_none(), || format!("{cls} and {} share roots", prev.clone().unwrap()));

            let ws = dta_words(shape, dk)?;
            for rep in cls.reps() {
                let b = atlas.finite_borel(rep)?;
                words.check(ws[b.deleted] == rep.item.to_word(shape), || format!("{rep}: word at deleted node"));
                if rep.k == 0 {
                    let e = extend(shape, &rep.item.to_shuffle(shape))?;
                    local.check(e == b, || format!("{rep}: not the extension of its shuffle"));
                }
                local.check(b.deleted == deleted_index(shape, rep.k), || format!("{rep}: deleted node"));
                inverse.check(atlas.class_of_borel(&b).as_ref() == Ok(&cls), || format!("{rep}: round trip"));
                for op in EdgeOp::ALL {
                    if let Ok(q) = rep.edge(shape, op) {
                        let moved = node_move(shape, &b, op)?;
                        moves.check(atlas.finite_borel(&q).as_ref() == Ok(&moved), || format!("{op} at {rep}"));
                    }
                }
            }

            for root in shape.signed_roots() {
                for (idx, target) in act_all(shape, &cls, root)? {
                    let rep = &cls.reps()[idx];
                    let b = atlas.finite_borel(rep)?;
                    let beta = local_root(shape, root, rep.k)?;
                    let Some(node) = b.node_of(beta) else {
                        equi.check(false, || format!("{beta} not simple at {rep}"));
                        continue;
                    };
                    let after = affine_reflect(shape, &b, node)?;
                    let ok = (atlas.affine_borel(&target) == Ok(&after.dk))
                        && atlas.class_of_borel(&after).as_ref() == Ok(&target);
                    equi.check(ok, || format!("{root} on {cls} via {rep}"));
                    greys.check(after.dk.greys().len() % 2 == 0, || format!("{root} on {cls}: grey parity"));
                }
            }
        }
    }
    Ok(vec![sums, gram, greys, words, local, inj, inverse, equi, moves])
}

/// For a non-coprime shape the class operations must refuse to run.
pub fn non_coprime_guard(shape: &RectShape) -> PropertyResult {
    let mut res = PropertyResult::new("non-coprime-guard");
    let want = Error::NonCoprimeShape { n: shape.n(), m: shape.m() };
    let p = Anchored::new(shape.empty(), 0);
    res.check(enumerate_class(shape, &p).err() == Some(want.clone()), || "enumerate_class".into());
    res.check(classes_at_degree(shape, 0).err() == Some(want.clone()), || "classes_at_degree".into());
    res.check(vss_check(shape, 0..=1).err() == Some(want.clone()), || "vss_check".into());
    res.check(BorelAtlas::build(shape, 0..=1).err() == Some(want.clone()), || "BorelAtlas".into());
    if shape.n() == shape.m() {
        res.check(extend(shape, &Shuffle::identity(shape)).err() == Some(want), || "extend".into());
    }
    res
}

/// Every check that applies to the shape, on degrees `lo..=hi`.
pub fn run_all(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<Report> {
    let mut results = vec![
        commuting_squares(shape),
        involution(shape),
        edge_structure(shape),
        row_compatibility(shape),
        column_compatibility(shape),
    ];
    if !shape.is_coprime() {
        results.push(non_coprime_guard(shape));
        return Ok(Report { results });
    }
    if shape.require_class_shape().is_err() {
        return Ok(Report { results });
    }
    results.push(class_anatomy(shape, degrees.clone())?);
    results.push(class_count(shape, degrees.clone())?);
    results.push(embedding(shape)?);
    results.push(well_defined_action(shape, degrees.clone())?);
    results.push(carriers(shape, degrees.clone())?);
    results.push(approx_parts(shape, degrees.clone())?);
    results.push(vss(shape, degrees.clone())?);
    results.extend(borel_suite(shape, degrees)?);
    Ok(Report { results })
}

/// Signed roots that are defined at some member of `cls`.
pub fn defined_roots(shape: &RectShape, cls: &OrbitClass) -> Vec<OddRoot> {
    shape.signed_roots().into_iter().filter(|&r| act(shape, cls, r).is_ok()).collect()
}
