//! Acceptance suite. Each test prints one `[id] PASS|FAIL` line and checks
//! the library against an oracle written here from first principles.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::time::{Duration, Instant};

use tiso_core::affine::{affine_reflect, dta_words_from_greys, extend, node_move, BorelAtlas};
use tiso_core::graph::{build_graph, node_label, GraphMode};
use tiso_core::orbit::{approx_decompose, classes_at_degree, enumerate_class, vss_check, Anchored};
use tiso_core::verify;
use tiso_core::{Diagram, EdgeOp, Error, GlobalRoot, OddRoot, OrbitClass, RectShape, Shuffle};

const ANATOMY_BUDGET: Duration = Duration::from_secs(10);

fn report(id: u32, what: &str, failures: &[String]) -> bool {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{id:>2}] {status}  {what}");
    for f in failures.iter().take(5) {
        println!("       {f}");
    }
    failures.is_empty()
}

fn shape(n: usize, m: usize) -> RectShape {
    RectShape::new(n, m).unwrap()
}

fn diagram(s: &RectShape, parts: &str) -> Diagram {
    Diagram::parse(s, parts).unwrap()
}

fn class(s: &RectShape, parts: &str, k: i64) -> OrbitClass {
    enumerate_class(s, &Anchored::new(diagram(s, parts), k)).unwrap()
}

type RawPair = (Vec<usize>, i64);

/// The four generating moves on raw parts `λ₁ ≥ … ≥ λ_n`.
fn raw_moves(n: usize, m: usize, (p, k): &RawPair) -> Vec<RawPair> {
    let (n_, m_) = (n as i64, m as i64);
    let mut out = Vec::new();
    if p[0] == m {
        let mut q = p[1..].to_vec();
        q.push(0);
        out.push((q, k + m_));
    }
    if p[n - 1] == 0 {
        let mut q = vec![m];
        q.extend_from_slice(&p[..n - 1]);
        out.push((q, k - m_));
    }
    if p[n - 1] >= 1 {
        out.push((p.iter().map(|x| x - 1).collect(), k + n_));
    }
    if p[0] < m {
        out.push((p.iter().map(|x| x + 1).collect(), k - n_));
    }
    out
}

fn raw_closure(n: usize, m: usize, start: RawPair) -> BTreeSet<RawPair> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for next in raw_moves(n, m, &cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn all_parts(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=cap {
            cur.push(x);
            go(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, &mut Vec::new(), &mut out);
    out
}

fn choose(a: usize, b: usize) -> usize {
    (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

#[test]
fn criterion_01_class_anatomy() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (n, m) in [(1, 2), (2, 3), (3, 4), (2, 5), (3, 5), (4, 5)] {
        let s = shape(n, m);
        let window = 2 * (n * m) as i64;
        for d in 0..window {
            for cls in classes_at_degree(&s, d).unwrap() {
                let members: BTreeSet<RawPair> = cls.reps().iter().map(|r| (r.item.parts().to_vec(), r.k)).collect();
                let c = cls.canonical();
                let oracle = raw_closure(n, m, (c.item.parts().to_vec(), c.k));
                if members != oracle {
                    failures.push(format!("{n}x{m} {cls}: members differ from the move closure"));
                }
                if members.len() != m + n {
                    failures.push(format!("{n}x{m} {cls}: {} members", members.len()));
                }
                let ks: BTreeSet<i64> = members.iter().map(|p| p.1).collect();
                if ks.len() != m + n {
                    failures.push(format!("{n}x{m} {cls}: repeated k"));
                }
                let residues: BTreeSet<i64> = ks.iter().map(|k| k.rem_euclid((m + n) as i64)).collect();
                if residues.len() != m + n {
                    failures.push(format!("{n}x{m} {cls}: k collide mod m+n"));
                }
                if members.iter().any(|(p, k)| p.iter().sum::<usize>() as i64 + k != d) {
                    failures.push(format!("{n}x{m} {cls}: mixed degrees"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ANATOMY_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {ANATOMY_BUDGET:?}"));
    }
    let ok = report(1, &format!("class size m+n, distinct k (and mod m+n), one degree, {elapsed:.2?}"), &failures);
    assert!(ok);
}

/// The residue clause as literally stated: rotation numbers in a class
/// pairwise distinct modulo `mn`. It does not hold; see the counterexample
/// printed on failure.
#[test]
fn criterion_01_residues_mod_mn_as_stated() {
    let mut failures = Vec::new();
    for (n, m) in [(1, 2), (2, 3), (3, 4), (2, 5), (3, 5), (4, 5)] {
        let s = shape(n, m);
        let mn = (n * m) as i64;
        for d in 0..2 * mn {
            for cls in classes_at_degree(&s, d).unwrap() {
                let mut by_residue: BTreeMap<i64, Vec<String>> = BTreeMap::new();
                for r in cls.reps() {
                    by_residue.entry(r.k.rem_euclid(mn)).or_default().push(r.to_string());
                }
                if let Some(clash) = by_residue.values().find(|v| v.len() > 1) {
                    failures.push(format!("{n}x{m}: {} share a residue mod {mn}", clash.join(" ~ ")));
                }
            }
        }
    }
    let ok = report(1, "class rotation numbers distinct mod mn (literal clause)", &failures);
    assert!(ok, "{} classes have rotation numbers colliding mod mn", failures.len());
}

#[test]
fn criterion_02_counting() {
    let mut failures = Vec::new();
    for (n, m, want) in [(2, 3, 2), (3, 4, 5), (4, 5, 14), (1, 2, 1), (2, 5, 3), (3, 5, 7)] {
        let s = shape(n, m);
        if choose(m + n, n) / (m + n) != want {
            failures.push(format!("{n}x{m}: binomial oracle"));
        }
        let mn = (n * m) as i64;
        for d in -mn..2 * mn {
            let here = classes_at_degree(&s, d).unwrap();
            // independent count: partition X × {k : |λ| + k = d} by the move closure
            let mut seen = BTreeSet::new();
            let mut blocks = 0;
            for p in all_parts(n, m) {
                let k = d - p.iter().sum::<usize>() as i64;
                if seen.contains(&(p.clone(), k)) {
                    continue;
                }
                blocks += 1;
                seen.extend(raw_closure(n, m, (p, k)));
            }
            if here.len() != want || blocks != want {
                failures.push(format!("{n}x{m} degree {d}: {} classes, oracle {blocks}, want {want}", here.len()));
            }
            let shifted: BTreeSet<OrbitClass> = here.iter().map(|c| c.shifted(mn)).collect();
            let there: BTreeSet<OrbitClass> = classes_at_degree(&s, d + mn).unwrap().into_iter().collect();
            if shifted != there {
                failures.push(format!("{n}x{m}: shift by mn is not a bijection at degree {d}"));
            }
        }
    }
    assert!(report(2, "classes per degree = C(m+n,n)/(m+n); d -> d+mn shift", &failures));
}

#[test]
fn criterion_03_small_hasse_graph() {
    let s = shape(2, 3);
    let g = build_graph(&s, 0..=6, GraphMode::Hasse).unwrap();
    let mut failures = Vec::new();
    let expected: BTreeSet<OrbitClass> = [
        ("0,0", 0),
        ("1,0", 0),
        ("1,1", 0),
        ("2,1", 0),
        ("2,2", 0),
        ("3,2", 0),
        ("3,3", 0),
        ("2,1", -3),
        ("2,2", -3),
        ("2,0", 0),
        ("3,0", 0),
        ("3,1", 0),
        ("1,1", 3),
        ("2,1", 3),
    ]
    .into_iter()
    .map(|(p, k)| class(&s, p, k))
    .collect();
    let got: BTreeSet<OrbitClass> = g.vertices.iter().cloned().collect();
    if got != expected || g.vertices.len() != 14 {
        failures.push(format!("vertex set differs: {} vertices", g.vertices.len()));
    }
    if class(&s, "3,3", 0) != class(&s, "0,0", 6) {
        failures.push("(3,3) is not the class of the empty diagram at k=6".into());
    }
    let labels: BTreeSet<String> = g.vertices.iter().map(|v| node_label(&s, v)).collect();
    let want_labels: BTreeSet<String> = [
        "∅", "(1)", "(1,1)", "(2,1)", "(2,2)", "(3,2)", "(3,3)", "(2,1)^-3", "(2,2)^-3", "(2)", "(3)", "(3,1)",
        "(1,1)^3", "(2,1)^3",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    if labels != want_labels {
        failures.push(format!("labels {labels:?}"));
    }
    for (src, dst, root) in [
        (("3,1", 0), ("1,1", 3), "+e2-d1"),
        (("3,2", 0), ("2,1", 3), "+e2-d1"),
        (("2,1", -3), ("1,0", 0), "+e1-d3"),
        (("2,2", -3), ("2,0", 0), "+e1-d3"),
    ] {
        let (a, b) = (class(&s, src.0, src.1), class(&s, dst.0, dst.1));
        if !g.edges.iter().any(|e| e.src == a && e.dst == b && e.root.to_string() == root) {
            failures.push(format!("missing edge {a} -> {b} {root}"));
        }
    }
    for e in &g.edges {
        if !e.root.is_positive() || e.dst.degree(&s) != e.src.degree(&s) + 1 {
            failures.push(format!("bad hasse edge {} -> {}", e.src, e.dst));
        }
    }
    assert!(report(3, "(2,3) hasse graph on degrees 0..6: 14 vertices and the four stated edges", &failures));
}

/// Root vector from `(coefficient, basis)` terms; basis `"b"` is δ̄.
fn vec_root(s: &RectShape, terms: &[(i64, &str)]) -> GlobalRoot {
    let mut eps = vec![0; s.n()];
    let mut del = vec![0; s.m()];
    let mut dbar = 0;
    for &(c, b) in terms {
        let idx = |t: &str| t[1..].parse::<usize>().unwrap() - 1;
        match &b[..1] {
            "e" => eps[idx(b)] += c,
            "d" => del[idx(b)] += c,
            _ => dbar += c,
        }
    }
    GlobalRoot::from_parts(eps, del, dbar)
}

#[test]
fn criterion_04_global_names_table() {
    let s = shape(3, 4);
    let e = |i: &'static str, j: &'static str| [(1, i), (-1, j)];
    let table: Vec<Vec<GlobalRoot>> = vec![
        vec![
            vec_root(&s, &e("d1", "e1")),
            vec_root(&s, &e("e1", "e2")),
            vec_root(&s, &e("e2", "d2")),
            vec_root(&s, &e("d2", "d3")),
            vec_root(&s, &e("d3", "d4")),
            vec_root(&s, &e("d4", "e3")),
        ],
        vec![
            vec_root(&s, &[(1, "b"), (-1, "d1"), (1, "e3")]),
            vec_root(&s, &e("d1", "e1")),
            vec_root(&s, &e("e1", "e2")),
            vec_root(&s, &e("e2", "d2")),
            vec_root(&s, &e("d2", "d3")),
            vec_root(&s, &e("d3", "d4")),
        ],
        vec![
            vec_root(&s, &[(-1, "b"), (1, "d1"), (-1, "e3")]),
            vec_root(&s, &[(1, "b"), (1, "e3"), (-1, "e1")]),
            vec_root(&s, &e("e1", "e2")),
            vec_root(&s, &e("e2", "d2")),
            vec_root(&s, &e("d2", "d3")),
            vec_root(&s, &e("d3", "d4")),
        ],
        vec![
            vec_root(&s, &[(1, "b"), (1, "e3"), (-1, "e1")]),
            vec_root(&s, &e("e1", "e2")),
            vec_root(&s, &e("e2", "d2")),
            vec_root(&s, &e("d2", "d3")),
            vec_root(&s, &e("d3", "d4")),
            vec_root(&s, &[(1, "b"), (1, "d4"), (-1, "d1")]),
        ],
    ];
    let mut failures = Vec::new();

    // by the moves
    let b0 = extend(&s, &s.hook().to_shuffle(&s)).unwrap();
    let b1 = node_move(&s, &b0, EdgeOp::RowMinus).unwrap();
    let b2 = affine_reflect(&s, &b1, b1.node_of(OddRoot::positive(1, 1)).unwrap()).unwrap();
    let b3 = node_move(&s, &b2, EdgeOp::ColMinus).unwrap();
    let pairs = [("4,1,1", 0), ("1,1,0", 4), ("1,1,1", 4), ("0,0,0", 7)];
    for (row, ((b, want), (p, k))) in [b0, b1, b2, b3].iter().zip(&table).zip(pairs).enumerate() {
        if &b.simple_roots() != want {
            failures.push(format!("row {}: moves give {}", row + 1, b));
        }
        if b.sigma.to_diagram(&s) != diagram(&s, p) || b.k != k {
            failures.push(format!("row {}: local name {} {}", row + 1, b.sigma, b.k));
        }
    }

    // by the class search from [∅, 0]
    let atlas = BorelAtlas::build(&s, 0..=8).unwrap();
    for (row, (want, (p, k))) in table.iter().zip(pairs).enumerate() {
        let b = atlas.finite_borel(&Anchored::new(diagram(&s, p), k)).unwrap();
        if &b.simple_roots() != want {
            failures.push(format!("row {}: search gives {}", row + 1, b));
        }
    }
    assert!(report(4, "(3,4) global simple-root table, four rows", &failures));
}

#[test]
fn criterion_05_words_from_parities() {
    let s = shape(2, 3);
    let mut failures = Vec::new();
    let words =
        |g: &[usize]| -> Vec<String> { dta_words_from_greys(&s, g).unwrap().iter().map(|w| w.to_string()).collect() };
    let first = words(&[0, 2]);
    if first != ["ddrrr", "drrrd", "rrrdd", "rrddr", "rddrr"] {
        failures.push(format!("greys {{0,2}}: {first:?}"));
    }
    // w_i is w_0 with its first i letters moved to the end
    for (i, w) in first.iter().enumerate() {
        let rotated: String = first[0][i..].chars().chain(first[0][..i].chars()).collect();
        if *w != rotated {
            failures.push(format!("w_{i} = {w} is not a rotation of w_0"));
        }
    }
    for (g, want) in [(&[0usize, 3][..], "rrrdd"), (&[1, 2, 3, 4][..], "rdrdr")] {
        let got = &words(g)[0];
        if got != want {
            failures.push(format!("greys {g:?}: {got}, want {want}"));
        }
    }
    let base = extend(&s, &Shuffle::identity(&s)).unwrap();
    if base.dk.greys() != [0, 2] {
        failures.push(format!("extend(1) greys {:?}", base.dk.greys()));
    }
    assert!(report(5, "words from grey-node patterns", &failures));
}

fn coprime_shapes_up_to(total: usize) -> Vec<RectShape> {
    let mut out = Vec::new();
    for n in 1..total {
        for m in 1..=total - n {
            let s = shape(n, m);
            if s.is_coprime() && (n, m) != (1, 1) {
                out.push(s);
            }
        }
    }
    out
}

/// Box-set model: row `i` (top-down) has `λ_{n+1−i}` boxes; `+(ε_i − δ_j)`
/// adds box `(i, j)`, `−(ε_i − δ_j)` removes it, when the result is a
/// diagram.
fn oracle_t(s: &RectShape, parts: &[usize], r: OddRoot) -> Option<Vec<usize>> {
    let n = s.n();
    let mut rows: Vec<usize> = (1..=n).map(|i| parts[n - i]).collect();
    let (i, j) = (r.i - 1, r.j);
    if r.is_positive() {
        if rows[i] + 1 != j {
            return None;
        }
        rows[i] += 1;
    } else {
        if rows[i] != j {
            return None;
        }
        rows[i] -= 1;
    }
    if rows.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    Some((1..=n).map(|a| rows[n - a]).collect())
}

#[test]
fn criterion_06_identity_suites() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for s in coprime_shapes_up_to(9) {
        for lambda in s.diagrams() {
            for root in s.signed_roots() {
                checked += 1;
                let lib = lambda.reflect(&s, root).ok().map(|d| d.parts().to_vec());
                if lib != oracle_t(&s, lambda.parts(), root) {
                    failures.push(format!("{}x{}: t {root} at {lambda} disagrees with box oracle", s.n(), s.m()));
                }
            }
        }
        for res in [
            verify::commuting_squares(&s),
            verify::row_compatibility(&s),
            verify::column_compatibility(&s),
            verify::involution(&s),
            verify::edge_structure(&s),
        ] {
            checked += res.checked;
            failures.extend(res.violations.iter().map(|v| format!("{}x{} {}: {v}", s.n(), s.m(), res.name)));
        }
    }
    assert!(report(6, &format!("identity suites, coprime m+n <= 9 ({checked} instances)"), &failures));
}

#[test]
fn criterion_07_well_defined_action() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for s in coprime_shapes_up_to(9) {
        // the action commutes with k -> k + mn, so one period covers every class
        let period = (s.n() * s.m()) as i64;
        let res = verify::well_defined_action(&s, 0..=period - 1).unwrap();
        checked += res.checked;
        failures.extend(res.violations.iter().map(|v| format!("{}x{}: {v}", s.n(), s.m())));
    }
    assert!(report(7, &format!("every admitting member gives the same class ({checked} instances)"), &failures));
}

/// Union-find over pairs of `X × Z` with `|λ| + k` in a degree window,
/// joined by row moves only.
fn row_move_blocks(m: usize, pairs: &[RawPair]) -> Vec<usize> {
    let index: HashMap<&RawPair, usize> = pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (i, (p, k)) in pairs.iter().enumerate() {
        if p[0] == m {
            let mut q = p[1..].to_vec();
            q.push(0);
            if let Some(&j) = index.get(&(q, k + m as i64)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..pairs.len()).map(|i| find(&mut parent, i)).collect()
}

#[test]
fn criterion_08_row_move_refinement() {
    let mut failures = Vec::new();
    for (n, m, hi) in [(2, 3, 6), (3, 4, 11)] {
        let s = shape(n, m);
        for d in 0..=hi {
            for cls in classes_at_degree(&s, d).unwrap() {
                let parts = approx_decompose(&s, &cls).unwrap();
                if parts.len() != m || parts.iter().any(Vec::is_empty) {
                    failures.push(format!("{n}x{m} {cls}: {} parts", parts.len()));
                }
                // oracle: row-move blocks inside the class
                let members: Vec<RawPair> = cls.reps().iter().map(|r| (r.item.parts().to_vec(), r.k)).collect();
                let roots = row_move_blocks(m, &members);
                let oracle: BTreeSet<BTreeSet<RawPair>> = roots
                    .iter()
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .map(|r| members.iter().zip(&roots).filter(|(_, x)| *x == r).map(|(p, _)| p.clone()).collect())
                    .collect();
                let lib: BTreeSet<BTreeSet<RawPair>> =
                    parts.iter().map(|p| p.iter().map(|r| (r.item.parts().to_vec(), r.k)).collect()).collect();
                if lib != oracle {
                    failures.push(format!("{n}x{m} {cls}: parts differ from row-move blocks"));
                }
            }
        }
        let r = vss_check(&s, 0..=hi).unwrap();
        failures.extend(r.violations.iter().map(|v| format!("{n}x{m}: {v}")));
        if r.approx_classes != r.classes || r.classes != (hi as usize + 1) * s.classes_per_degree() {
            failures.push(format!("{n}x{m}: {} vs {} classes", r.approx_classes, r.classes));
        }
    }
    assert!(report(8, "m row-move parts per class; X x mZ bijection preserves morphisms", &failures));
}

#[test]
fn criterion_09_borel_bijection() {
    let mut failures = Vec::new();
    for (n, m, hi) in [(2, 3, 6), (3, 4, 12)] {
        let s = shape(n, m);
        for res in verify::borel_suite(&s, 0..=hi).unwrap() {
            failures.extend(res.violations.iter().map(|v| format!("{n}x{m} {}: {v}", res.name)));
        }
        // independent: form computed from coefficients, δ̄ orthogonal
        let atlas = BorelAtlas::build(&s, 0..=hi).unwrap();
        let mut seen = BTreeSet::new();
        for d in 0..=hi {
            for cls in classes_at_degree(&s, d).unwrap() {
                let dk = atlas.affine_borel(&cls).unwrap();
                let nodes = dk.nodes();
                let form = |a: &GlobalRoot, b: &GlobalRoot| -> i64 {
                    a.eps().iter().zip(b.eps()).map(|(x, y)| x * y).sum::<i64>()
                        - a.del().iter().zip(b.del()).map(|(x, y)| x * y).sum::<i64>()
                };
                for a in nodes {
                    let row: i64 = nodes.iter().map(|b| form(a, b)).sum();
                    if row != 0 {
                        failures.push(format!("{n}x{m} {cls}: Gram row sum {row}"));
                    }
                }
                let total = nodes.iter().fold(GlobalRoot::zero(&s), |acc, r| &acc + r);
                if total != vec_root(&s, &[(1, "b")]) {
                    failures.push(format!("{n}x{m} {cls}: node sum {total}"));
                }
                let mut sorted = nodes.to_vec();
                sorted.sort();
                if !seen.insert(sorted) {
                    failures.push(format!("{n}x{m} {cls}: root set repeats"));
                }
                let b = atlas.borel_of_class(&cls).unwrap();
                if atlas.class_of_borel(&b).as_ref() != Ok(&cls) {
                    failures.push(format!("{n}x{m} {cls}: round trip"));
                }
            }
        }
    }
    assert!(report(9, "affine Borels: injective, invertible, equivariant, node sum dbar, zero Gram rows", &failures));
}

#[test]
fn criterion_10_non_coprime_guard() {
    let s = shape(2, 2);
    let mut failures = Vec::new();
    let chain = raw_closure(2, 2, (vec![2, 0], 0));
    for p in [(vec![2, 2], -2), (vec![1, 1], 0)] {
        if !chain.contains(&p) {
            failures.push(format!("{p:?} not equivalent to ((2,0),0)"));
        }
    }
    // the explicit two steps
    if !raw_moves(2, 2, &(vec![2, 0], 0)).contains(&(vec![2, 2], -2)) {
        failures.push("((2,0),0) -> ((2,2),-2) is not a single move".into());
    }
    if !raw_moves(2, 2, &(vec![2, 2], -2)).contains(&(vec![1, 1], 0)) {
        failures.push("((2,2),-2) -> ((1,1),0) is not a single move".into());
    }
    let want = Error::NonCoprimeShape { n: 2, m: 2 };
    let p = Anchored::new(diagram(&s, "2,0"), 0);
    let checks: Vec<(&str, Option<Error>)> = vec![
        ("enumerate_class", enumerate_class(&s, &p).err()),
        ("classes_at_degree", classes_at_degree(&s, 0).err()),
        ("vss_check", vss_check(&s, 0..=2).err()),
        ("build_graph", build_graph(&s, 0..=2, GraphMode::Hasse).err()),
        ("BorelAtlas", BorelAtlas::build(&s, 0..=2).err()),
        ("extend", extend(&s, &Shuffle::identity(&s)).err()),
    ];
    for (name, err) in checks {
        if err.as_ref() != Some(&want) {
            failures.push(format!("{name} returned {err:?}"));
        }
    }
    assert!(report(10, "(2,2): ((2,0),0) ~ ((2,2),-2) ~ ((1,1),0); class operations refuse", &failures));
}
