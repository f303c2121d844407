//! Noncrossing partitions, 132-avoiding permutations, and the two posets they
//! carry: refinement on partitions (Q) and descent-set containment on
//! permutations (P).
//!
//! The bijection in [`bijection`] turns block minima into descents, which makes
//! P a coarsening of the dual of Q. The [`poset`] and [`census`] modules build
//! both posets explicitly and check the consequences exhaustively: Narayana
//! rank sizes, reverse-complement symmetry of descent-set counts,
//! self-duality of P, and the Sperner properties.
//!
//! ```
//! use catalan_poset::poset::antichain::max_antichain;
//! use catalan_poset::{build_poset_p, ncp_to_perm, NoncrossingPartition};
//!
//! let q: NoncrossingPartition = "{1,4,6}/{2,3}/{5}/{7,8}".parse()?;
//! assert_eq!(ncp_to_perm(&q).to_string(), "64573812");
//!
//! let p4 = build_poset_p(4)?;
//! assert_eq!(p4.rank_sizes(), [1, 6, 6, 1]);
//! assert_eq!(max_antichain(&p4)?, 6);
//! # Ok::<(), catalan_poset::Error>(())
//! ```

pub mod bijection;
pub mod census;
pub mod descent;
pub mod error;
pub mod numbers;
pub mod partition;
pub mod perm;
pub mod poset;
mod text;
pub mod verify;

pub use bijection::{ncp_to_perm, perm_to_ncp};
pub use census::{
    count_by_descent_set_bruteforce, count_by_descent_set_lemma, verify_lemma, DescentCensus,
};
pub use descent::DescentSet;
pub use error::{Error, Result};
pub use numbers::{catalan, narayana};
pub use partition::{enumerate_ncp, is_noncrossing, NoncrossingPartition};
pub use perm::{enumerate_av132, Permutation};
pub use poset::{build_poset_p, build_poset_q, leq_p, leq_q, GradedPoset};
