//! Odd reflections on Young diagrams in an `n × m` rectangle, their
//! extension to rotation classes, and the affine Borel picture.

pub mod affine;
pub mod error;
pub mod graph;
pub mod orbit;
pub mod rect;
pub mod reflect;
pub mod root;
pub mod verify;

pub use affine::{
    affine_reflect, dta_words, dta_words_from_greys, extend, node_move, BorelAtlas, CyclicDK, FiniteBorel,
};
pub use error::{Error, Result};
pub use graph::{build_graph, GraphMode, MorphismGraph};
pub use orbit::{
    act, approx_decompose, classes_at_degree, enumerate_class, vss_check, Anchored, AnchoredPair, Carrier, Class,
    OrbitClass,
};
pub use rect::{BorderWord, Diagram, Letter, OddRoot, RectShape, Shuffle, Sign};
pub use reflect::{corners, Corners, EdgeFlags, EdgeOp, PseudoCorners, SimpleRootSet};
pub use root::GlobalRoot;
