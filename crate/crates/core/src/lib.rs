//! Exact-arithmetic identifiability tests for Waring decompositions of
//! plane forms of even degree d = 8 + 2n.
//!
//! Given a decomposition T = a_1 L_1^d + ... + a_r L_r^d, the pipeline
//! decides with exact rational linear algebra whether the decomposition
//! is provably unique (so T is identifiable): it checks non-redundancy,
//! applies the small-length shortcut, and then tests whether the
//! Terracini space of the support attains its expected dimension. A
//! Kruskal-rank baseline certificate and position diagnostics (collinear,
//! conic, and cubic incidences of the support) come along for comparison
//! and explanation, plus an instrumented benchmark of the two methods.
//!
//! ```
//! use waring::{identify, io::parse_instance, VerdictKind};
//!
//! let inst = parse_instance(
//!     r#"{"degree": 8,
//!         "points": [[1,0,0], [0,1,0], [0,0,1], [1,1,1], [1,2,3]],
//!         "coefficients": [1, -2, 1, "1/3", 4]}"#,
//!     true,
//! )?;
//! let verdict = identify(&inst)?;
//! assert_eq!(verdict.kind, VerdictKind::IdentifiableTerracini);
//! assert_eq!(verdict.terracini.unwrap().projective_dimension, 14);
//! # Ok::<(), waring::Error>(())
//! ```

pub mod algebra;
pub mod bench;
pub mod error;
pub mod gen;
pub mod hilbert;
pub mod io;
pub mod kruskal;
pub mod linalg;
pub mod pipeline;
pub mod position;
pub mod terracini;

pub use algebra::{
    compose_tensor, monomial_basis, multiply_by_variable, normalize_point, power_form, Form,
    Instance, Monomial, ProjPoint, Scalar,
};
pub use error::{Error, Result};
pub use hilbert::{
    cayley_bacharach, evaluation_matrix, gkr_inequality_holds, hilbert_function, hilbert_profile,
    ideal_dim, HilbertProfile, PointSet,
};
pub use kruskal::{kruskal_rank, kruskal_rank_d, baseline_check, reshaped_kruskal_check};
pub use linalg::{is_in_span, kernel_basis, kernel_dim, rank, Matrix, OpCounter};
pub use pipeline::{identify, identify_with, non_redundant, validate_instance, Verdict, VerdictKind};
pub use position::{
    contained_in_cubic, family_obstruction, max_collinear, max_on_conic, FamilyObstruction,
    PositionReport,
};
pub use terracini::{terracini_dimension, terracini_matrix, terracini_test, TerraciniReport};
