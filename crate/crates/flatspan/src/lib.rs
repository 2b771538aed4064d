//! Exact-arithmetic incidence geometry for point sets in rational projective space.
//!
//! Everything here runs over `BigRational` coordinates: no floats, no epsilons,
//! fully deterministic. The crate models points and flats of `P^d(Q)` in canonical
//! form, enumerates the flats spanned by a configuration, evaluates richness and
//! degeneracy predicates exactly, computes essential dimension by exhaustive
//! cover search, and packages the whole thing behind verification suites with
//! reproducible JSON/CSV reports.
//!
//! Start with the runnable examples (`cargo run --example <name>`), one per
//! capability:
//!
//! * `span_and_meet`: canonical points/flats, join/meet, the dimension identity,
//!   projection from a center flat
//! * `spanned_flats`: spanned-flat inventories and richness profiles
//! * `degeneracy`: alpha-degeneracy vs. essential degeneracy, gamma saturation
//! * `essential_dimension`: exact cover search, g-profiles, Beck-style products
//! * `extremal_constructions`: the extremal families (skew lines, flat plus
//!   line, k lines, planes through a common line)
//! * `multiset_bound`: the rich degenerate flat count bound for multisets
//! * `partition_covers`: the ascending-dimension cover partition procedure
//! * `witness_refinement`: degeneracy witness refinement and skew-line witnesses
//! * `config_files`: configuration files and reports on disk
//!
//! The `flatspan` binary exposes the same functionality as a small CLI
//! (`gen`, `count`, `degeneracy`, `essdim`, `verify`, `report`).

pub mod constructions;
pub mod essdim;
pub mod flat;
pub mod incidence;
pub mod io;
pub mod linalg;
pub mod point;
pub mod pointset;
pub mod procedures;
pub mod scalar;
pub mod suites;

pub use flat::Flat;
pub use point::{GeomError, Point};
pub use pointset::{Configuration, MultiPointSet, PointSet};
pub use scalar::Scalar;
