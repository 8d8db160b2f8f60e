//! Exact characters of rectangle and fork representations of `so(2k+1)`,
//! `so(2k)` and `osp(m|n)` as sums of (supersymmetric) Schur functions,
//! their `t`- and `q`-specializations, and an independent Freudenthal
//! oracle for the classical cases.
//!
//! ```
//! use superchar::{char_so_odd, Partition};
//!
//! let e = char_so_odd(2, 1).unwrap();
//! let labels: Vec<String> = e.labels().map(Partition::to_string).collect();
//! assert_eq!(labels, ["()", "(1)", "(1,1)"]);
//! ```

pub mod character;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod specialize;
pub mod symfunc;

pub use character::{
    char_osp1, char_osp_even, char_osp_even_fork_conj, char_osp_odd, char_so_even_fork, char_so_odd,
    check_fork_sum, Algebra, CharExpansion, DynkinLabels, Family, Prefactor, Ranks,
};
pub use error::{Error, Result};
pub use partition::{enumerate, EnumConstraints, Partition, PartitionClass, PartitionStream, WeightBound};
pub use report::{Mismatch, Params, Status, VerificationReport};
pub use specialize::{
    default_degree, qdim_so_odd, t_dimension, t_superdimension, verify_qdim_so7, verify_superdim_identity,
    IdentityParams, SuperdimIdentity, TruncatedSeries,
};
pub use symfunc::{gl_dim, gl_mn_dim, gl_superdim, schur_eval, super_schur_eval, RationalPoint};
