//! Cayley and Hasse graphs of the class action on a degree window.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{act, classes_at_degree, AnchoredPair, OrbitClass};
use crate::rect::{OddRoot, RectShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphMode {
    /// Positive roots only; every edge raises the degree by one.
    Hasse,
    /// All signed roots.
    Cayley,
}

impl fmt::Display for GraphMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphMode::Hasse => "hasse",
            GraphMode::Cayley => "cayley",
        })
    }
}

impl FromStr for GraphMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hasse" => Ok(GraphMode::Hasse),
            "cayley" => Ok(GraphMode::Cayley),
            _ => Err(Error::Parse(format!("graph mode {s:?}: expected hasse or cayley"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: OrbitClass,
    pub dst: OrbitClass,
    pub root: OddRoot,
}

#[derive(Clone, Debug)]
pub struct MorphismGraph {
    pub shape: RectShape,
    pub degrees: (i64, i64),
    pub mode: GraphMode,
    /// Sorted by degree, then by canonical member.
    pub vertices: Vec<OrbitClass>,
    pub edges: Vec<Edge>,
}

/// Vertices are all classes with degree in the window; edges are the
/// defined actions whose target stays inside it.
pub fn build_graph(
    shape: &RectShape,
    degrees: std::ops::RangeInclusive<i64>,
    mode: GraphMode,
) -> Result<MorphismGraph> {
    shape.require_class_shape()?;
    let (lo, hi) = (*degrees.start(), *degrees.end());
    let mut vertices = Vec::new();
    for d in lo..=hi {
        vertices.extend(classes_at_degree(shape, d)?);
    }
    let roots: Vec<OddRoot> = match mode {
        GraphMode::Hasse => shape.positive_roots().collect(),
        GraphMode::Cayley => shape.signed_roots(),
    };
    let found: Vec<Vec<Edge>> = vertices
        .par_iter()
        .map(|v| {
            roots
                .iter()
                .filter_map(|&root| {
                    let dst = act(shape, v, root).ok()?;
                    let d = dst.degree(shape);
                    (lo..=hi).contains(&d).then(|| Edge { src: v.clone(), dst, root })
                })
                .collect()
        })
        .collect();
    let edges: BTreeSet<Edge> = found.into_iter().flatten().collect();
    Ok(MorphismGraph { shape: *shape, degrees: (lo, hi), mode, vertices, edges: edges.into_iter().collect() })
}

/// Stable node name built from the canonical member, e.g. `3,1@0`.
pub fn node_name(cls: &OrbitClass) -> String {
    let c = cls.canonical();
    format!("{}@{}", c.item, c.k)
}

/// Human label, e.g. `(2,1)^-3`; see [`OrbitClass::display_rep`].
pub fn node_label(shape: &RectShape, cls: &OrbitClass) -> String {
    pair_label(cls.display_rep(shape))
}

pub fn pair_label(p: &AnchoredPair) -> String {
    let nonzero: Vec<String> = p.item.parts().iter().filter(|&&x| x > 0).map(|x| x.to_string()).collect();
    let body = if nonzero.is_empty() { "∅".to_string() } else { format!("({})", nonzero.join(",")) };
    if p.k == 0 {
        body
    } else {
        format!("{body}^{}", p.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub m: usize,
    pub classes: Vec<ClassJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub degree: i64,
    pub canonical: PairJson,
    pub reps: Vec<RepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub partition: Vec<usize>,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub partition: Vec<usize>,
    pub word: String,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: String,
    pub dst: String,
    pub root: String,
}

pub fn class_json(shape: &RectShape, cls: &OrbitClass) -> ClassJson {
    let c = cls.canonical();
    ClassJson {
        degree: cls.degree(shape),
        canonical: PairJson { partition: c.item.parts().to_vec(), k: c.k },
        reps: cls
            .reps()
            .iter()
            .map(|r| RepJson { partition: r.item.parts().to_vec(), word: r.item.to_word(shape).to_string(), k: r.k })
            .collect(),
    }
}

impl MorphismGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.shape.n(),
            m: self.shape.m(),
            classes: self.vertices.iter().map(|c| class_json(&self.shape, c)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson { src: node_name(&e.src), dst: node_name(&e.dst), root: e.root.to_string() })
                .collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph tiso_{}x{}_{} {{", self.shape.n(), self.shape.m(), self.mode);
        let _ = writeln!(out, "  rankdir=LR;");
        let mut degree = None;
        for v in &self.vertices {
            let d = v.degree(&self.shape);
            if self.mode == GraphMode::Hasse && degree != Some(d) {
                if degree.is_some() {
                    let _ = writeln!(out, "  }}");
                }
                let _ = writeln!(out, "  {{ rank=same; // degree {d}");
                degree = Some(d);
            }
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", node_name(v), node_label(&self.shape, v));
        }
        if degree.is_some() {
            let _ = writeln!(out, "  }}");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", node_name(&e.src), node_name(&e.dst), e.root);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut degree = None;
        for v in &self.vertices {
            let d = v.degree(&self.shape);
            if degree != Some(d) {
                let _ = write!(out, "{}degree {d}:", if degree.is_some() { "\n" } else { "" });
                degree = Some(d);
            }
            let _ = write!(out, " {}", node_label(&self.shape, v));
        }
        out.push('\n');
        for e in &self.edges {
            let _ =
                writeln!(out, "{} -> {}  {}", node_label(&self.shape, &e.src), node_label(&self.shape, &e.dst), e.root);
        }
        out
    }

    pub fn vertex_count_at(&self, degree: i64) -> usize {
        self.vertices.iter().filter(|v| v.degree(&self.shape) == degree).count()
    }
}
