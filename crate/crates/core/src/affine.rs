//! Borel subalgebras of the affinization, recorded by root data only.
//!
//! A Borel of the affinization is a cyclic Dynkin-Kac diagram: `m + n`
//! node roots summing to `δ̄`. A finite Borel `b̊(σ, k)` is such a diagram
//! with one node deleted; the remaining nodes, read cyclically from the
//! node after the deleted one, are the simple roots of `σ` under their
//! global names.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{act_all, classes_at_degree, enumerate_class, Anchored, AnchoredPair, OrbitClass};
use crate::rect::{BorderWord, Diagram, Letter, OddRoot, RectShape, Shuffle};
use crate::reflect::{simple_position, EdgeOp};
use crate::root::GlobalRoot;

/// A cyclic Dynkin-Kac diagram of `m + n` node roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicDK {
    nodes: Vec<GlobalRoot>,
}

impl CyclicDK {
    pub fn new(nodes: Vec<GlobalRoot>) -> Self {
        CyclicDK { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[GlobalRoot] {
        &self.nodes
    }

    pub fn is_grey(&self, node: usize) -> bool {
        self.nodes[node].is_isotropic()
    }

    pub fn greys(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_grey(i)).collect()
    }

    pub fn node_sum(&self) -> GlobalRoot {
        let mut it = self.nodes.iter();
        let first = it.next().cloned().expect("diagram has nodes");
        it.fold(first, |acc, r| &acc + r)
    }

    /// Gram matrix of all nodes; every row sums to zero since the nodes
    /// add up to `δ̄`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        gram_of(&self.nodes)
    }

    /// Node roots sorted, for comparing diagrams as sets.
    pub fn sorted_roots(&self) -> Vec<GlobalRoot> {
        let mut v = self.nodes.clone();
        v.sort();
        v
    }

    /// Odd reflection at a grey node: `γ ↦ −γ`, each cyclic neighbour
    /// gains `γ`.
    pub fn reflect(&self, node: usize) -> Result<CyclicDK> {
        let len = self.len();
        if node >= len {
            return Err(Error::NodeOutOfRange { node, len });
        }
        if !self.is_grey(node) {
            return Err(Error::NotIsotropic(node));
        }
        let gamma = self.nodes[node].clone();
        let mut nodes = self.nodes.clone();
        nodes[node] = -&gamma;
        for nb in [(node + len - 1) % len, (node + 1) % len] {
            nodes[nb] = &nodes[nb] + &gamma;
        }
        Ok(CyclicDK { nodes })
    }
}

impl fmt::Display for CyclicDK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

fn gram_of(roots: &[GlobalRoot]) -> Vec<Vec<i64>> {
    roots.iter().map(|a| roots.iter().map(|b| a.form(b)).collect()).collect()
}

/// `b̊(σ, k)`: a cyclic diagram with one deleted node and its local name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBorel {
    pub dk: CyclicDK,
    pub deleted: usize,
    pub sigma: Shuffle,
    pub k: i64,
}

impl FiniteBorel {
    /// The undeleted node indices, starting after the deleted one.
    pub fn simple_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        let len = self.dk.len();
        (1..len).map(move |t| (self.deleted + t) % len)
    }

    /// Global names of the simple roots, in the order of `σ`.
    pub fn simple_roots(&self) -> Vec<GlobalRoot> {
        self.simple_nodes().map(|i| self.dk.nodes[i].clone()).collect()
    }

    /// The Cartan matrix of the finite Borel.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        gram_of(&self.simple_roots())
    }

    pub fn diagram(&self, shape: &RectShape) -> Diagram {
        self.sigma.to_diagram(shape)
    }

    /// Position in `σ` of the simple root sitting at `node`.
    pub fn local_position(&self, node: usize) -> Result<usize> {
        let len = self.dk.len();
        if node >= len {
            return Err(Error::NodeOutOfRange { node, len });
        }
        if node == self.deleted {
            return Err(Error::DeletedNode(node));
        }
        Ok((node + len - self.deleted - 1) % len)
    }

    /// The odd local root at `node`, if the node is grey.
    pub fn local_root(&self, shape: &RectShape, node: usize) -> Result<OddRoot> {
        let p = self.local_position(node)?;
        let (a, b) = (self.sigma.entries()[p], self.sigma.entries()[p + 1]);
        let n = shape.n();
        match (a <= n, b <= n) {
            (true, false) => Ok(OddRoot::positive(a, b - n)),
            (false, true) => Ok(OddRoot::negative(b, a - n)),
            _ => Err(Error::NotIsotropic(node)),
        }
    }

    /// The node carrying the local odd root `root`, if it is simple.
    pub fn node_of(&self, root: OddRoot) -> Option<usize> {
        let p = simple_position(&self.sigma, root)?;
        Some((self.deleted + 1 + p) % self.dk.len())
    }
}

impl fmt::Display for FiniteBorel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({}, {}): ", self.sigma, self.k)?;
        for (t, r) in self.simple_roots().iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, " [deleted {}: {}]", self.deleted, self.dk.nodes[self.deleted])
    }
}

fn require_affine_shape(shape: &RectShape) -> Result<()> {
    if shape.n() == shape.m() {
        if shape.n() == 1 {
            return shape.require_class_shape();
        }
        return Err(Error::NonCoprimeShape { n: shape.n(), m: shape.m() });
    }
    Ok(())
}

/// Adjoins `α₀ = δ̄ − θ` as node 0 in front of the simple roots of `σ`;
/// node 0 is the deleted node and `k = 0`.
pub fn extend(shape: &RectShape, sigma: &Shuffle) -> Result<FiniteBorel> {
    require_affine_shape(shape)?;
    let simple = sigma.simple_roots(shape);
    let theta = simple.highest_root(shape);
    let alpha0 = &GlobalRoot::dbar(shape) - &theta;
    let mut nodes = Vec::with_capacity(shape.len());
    nodes.push(alpha0);
    nodes.extend(simple.roots);
    Ok(FiniteBorel { dk: CyclicDK { nodes }, deleted: 0, sigma: sigma.clone(), k: 0 })
}

/// Deletes a neighbouring node instead: the same affine Borel seen from
/// `(σ^{±r}, k ± m)` or `(σ^{±c}, k ∓ n)`.
pub fn node_move(shape: &RectShape, b: &FiniteBorel, op: EdgeOp) -> Result<FiniteBorel> {
    require_affine_shape(shape)?;
    let sigma = b.sigma.edge(shape, op)?;
    let len = b.dk.len();
    let deleted = match op {
        EdgeOp::RowMinus | EdgeOp::ColPlus => (b.deleted + len - 1) % len,
        EdgeOp::RowPlus | EdgeOp::ColMinus => (b.deleted + 1) % len,
    };
    Ok(FiniteBorel { dk: b.dk.clone(), deleted, sigma, k: b.k + op.rotation_shift(shape) })
}

/// Odd reflection at an undeleted grey node, carrying the local name along.
pub fn affine_reflect(shape: &RectShape, b: &FiniteBorel, node: usize) -> Result<FiniteBorel> {
    let root = b.local_root(shape, node)?;
    let dk = b.dk.reflect(node)?;
    let sigma = b.sigma.reflect(shape, root)?;
    Ok(FiniteBorel { dk, deleted: b.deleted, sigma, k: b.k })
}

/// The deleted node of every finite Borel with rotation number `k`.
pub fn deleted_index(shape: &RectShape, k: i64) -> usize {
    let len = shape.len() as i64;
    let inv = (shape.n() as i64).extended_gcd(&len).x;
    (inv * k).rem_euclid(len) as usize
}

/// Reads the border words off the grey nodes: edges are labelled going
/// round the cycle, a white node keeps the letter and a grey one flips it.
/// `w_i` starts at the edge after node `i`.
pub fn dta_words_from_greys(shape: &RectShape, greys: &[usize]) -> Result<Vec<BorderWord>> {
    let len = shape.len();
    if shape.n() == shape.m() {
        return Err(Error::ShapeUnsupported {
            n: shape.n(),
            m: shape.m(),
            reason: "words are not determined by parities when n = m",
        });
    }
    if let Some(&g) = greys.iter().find(|&&g| g >= len) {
        return Err(Error::NodeOutOfRange { node: g, len });
    }
    let mut grey = vec![false; len];
    for &g in greys {
        grey[g] = true;
    }
    if grey.iter().filter(|&&g| g).count() % 2 != 0 {
        return Err(Error::NotTypeA(format!("odd number of grey nodes in {greys:?}")));
    }
    let mut edges = Vec::with_capacity(len);
    edges.push(Letter::R);
    for i in 1..len {
        let prev = edges[i - 1];
        edges.push(if grey[i] { prev.flip() } else { prev });
    }
    let rs = edges.iter().filter(|&&l| l == Letter::R).count();
    if rs == shape.n() {
        edges.iter_mut().for_each(|l| *l = l.flip());
    } else if rs != shape.m() {
        return Err(Error::NotTypeA(format!("{rs} letters r, expected {} or {}", shape.m(), shape.n())));
    }
    let w0 = BorderWord::from_letters_unchecked(edges);
    Ok((0..len).map(|i| shape.rotate_word(&w0, i as i64)).collect())
}

pub fn dta_words(shape: &RectShape, dk: &CyclicDK) -> Result<Vec<BorderWord>> {
    dta_words_from_greys(shape, &dk.greys())
}

/// Serialized form of a finite Borel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelJson {
    pub nodes: Vec<NodeJson>,
    pub deleted: usize,
    pub local: LocalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub root: String,
    pub grey: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalJson {
    pub partition: String,
    pub shuffle: String,
    pub k: i64,
}

impl FiniteBorel {
    pub fn to_json(&self, shape: &RectShape) -> BorelJson {
        BorelJson {
            nodes: self.dk.nodes.iter().map(|r| NodeJson { root: r.to_string(), grey: r.is_isotropic() }).collect(),
            deleted: self.deleted,
            local: LocalJson { partition: self.diagram(shape).to_string(), shuffle: self.sigma.to_string(), k: self.k },
        }
    }

    pub fn from_json(shape: &RectShape, j: &BorelJson) -> Result<Self> {
        let nodes = j.nodes.iter().map(|n| GlobalRoot::parse(shape, &n.root)).collect::<Result<Vec<_>>>()?;
        if nodes.len() != shape.len() || j.deleted >= nodes.len() {
            return Err(Error::Parse(format!("expected {} nodes and a deleted index below it", shape.len())));
        }
        Ok(FiniteBorel {
            dk: CyclicDK { nodes },
            deleted: j.deleted,
            sigma: Shuffle::parse(shape, &j.local.shuffle)?,
            k: j.local.k,
        })
    }
}

/// Affine Borels of all classes in a degree window, found by search from
/// `[∅, 0] ↦ extend(1)`. Built once, then read-only.
#[derive(Clone, Debug)]
pub struct BorelAtlas {
    shape: RectShape,
    window: (i64, i64),
    by_class: BTreeMap<OrbitClass, CyclicDK>,
    by_dk: HashMap<CyclicDK, OrbitClass>,
}

const MAX_WIDENINGS: u32 = 8;

impl BorelAtlas {
    /// Covers every class of degree in `degrees`. The search runs on a
    /// wider window so that paths leaving the requested range are found.
    pub fn build(shape: &RectShape, degrees: std::ops::RangeInclusive<i64>) -> Result<Self> {
        shape.require_class_shape()?;
        let (lo, hi) = (*degrees.start(), *degrees.end());
        let mut wanted = Vec::new();
        for d in lo..=hi {
            wanted.extend(classes_at_degree(shape, d)?);
        }
        let mut pad = (shape.n() * shape.m()) as i64;
        for _ in 0..MAX_WIDENINGS {
            let atlas = Self::search(shape, lo.min(0) - pad, hi.max(0) + pad)?;
            if wanted.iter().all(|c| atlas.by_class.contains_key(c)) {
                return Ok(atlas);
            }
            pad *= 2;
        }
        Err(Error::UnknownBorel(format!("classes of degree {lo}..={hi} not reached")))
    }

    fn search(shape: &RectShape, lo: i64, hi: i64) -> Result<Self> {
        let start = enumerate_class(shape, &Anchored::new(shape.empty(), 0))?;
        let base = extend(shape, &Shuffle::identity(shape))?;
        let mut by_class = BTreeMap::from([(start.clone(), base.dk)]);
        let mut queue = VecDeque::from([start]);
        while let Some(cls) = queue.pop_front() {
            let dk = by_class[&cls].clone();
            for root in shape.signed_roots() {
                let Some((idx, target)) = act_all(shape, &cls, root)?.into_iter().next() else {
                    continue;
                };
                let d = target.degree(shape);
                if d < lo || d > hi || by_class.contains_key(&target) {
                    continue;
                }
                let b = finite_borel_with(shape, &dk, &cls.reps()[idx]);
                let beta = crate::orbit::local_root(shape, root, b.k)?;
                let node = b.node_of(beta).expect("admitting member has the root simple");
                by_class.insert(target.clone(), affine_reflect(shape, &b, node)?.dk);
                queue.push_back(target);
            }
        }
        let by_dk = by_class.iter().map(|(c, dk)| (dk.clone(), c.clone())).collect();
        Ok(BorelAtlas { shape: *shape, window: (lo, hi), by_class, by_dk })
    }

    pub fn shape(&self) -> &RectShape {
        &self.shape
    }

    /// Degree range that was searched.
    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn len(&self) -> usize {
        self.by_class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_class.is_empty()
    }

    pub fn classes(&self) -> impl Iterator<Item = (&OrbitClass, &CyclicDK)> {
        self.by_class.iter()
    }

    pub fn affine_borel(&self, cls: &OrbitClass) -> Result<&CyclicDK> {
        self.by_class.get(cls).ok_or_else(|| Error::UnknownBorel(cls.to_string()))
    }

    /// `b̊(λ, k)` for one member of a class.
    pub fn finite_borel(&self, pair: &AnchoredPair) -> Result<FiniteBorel> {
        let cls = enumerate_class(&self.shape, pair)?;
        let dk = self.affine_borel(&cls)?;
        Ok(finite_borel_with(&self.shape, dk, pair))
    }

    /// The finite Borel of the canonical member.
    pub fn borel_of_class(&self, cls: &OrbitClass) -> Result<FiniteBorel> {
        self.finite_borel(cls.canonical())
    }

    pub fn class_of_dk(&self, dk: &CyclicDK) -> Result<&OrbitClass> {
        self.by_dk.get(dk).ok_or_else(|| Error::UnknownBorel(dk.to_string()))
    }

    /// Inverse of [`borel_of_class`](Self::borel_of_class), checking that
    /// the local name agrees with the diagram.
    pub fn class_of_borel(&self, b: &FiniteBorel) -> Result<OrbitClass> {
        let cls = self.class_of_dk(&b.dk)?;
        let pair = Anchored::new(b.sigma.to_diagram(&self.shape), b.k);
        let words = dta_words(&self.shape, &b.dk)?;
        if !cls.contains(&pair) || b.deleted != deleted_index(&self.shape, b.k) || words[b.deleted] != b.sigma.to_word()
        {
            return Err(Error::UnknownBorel(format!("{b} is inconsistent with {cls}")));
        }
        Ok(cls.clone())
    }
}

fn finite_borel_with(shape: &RectShape, dk: &CyclicDK, pair: &AnchoredPair) -> FiniteBorel {
    FiniteBorel { dk: dk.clone(), deleted: deleted_index(shape, pair.k), sigma: pair.item.to_shuffle(shape), k: pair.k }
}
