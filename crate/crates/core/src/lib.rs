//! Gray-code listings of binary words on the augmentation graph `G(n)`, and
//! the Gray codes for 132-312-avoiding (Gilbreath) permutations derived from
//! them.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`bitword`]: fixed-length binary words, adjacency in `G(n)`, the
//!   polynomial-time [`Gap`] classifier and a breadth-first distance oracle.
//! * [`cycle`]: the listing from `00…0` to `10…0` built by alternating the
//!   odd→even and even→odd splice steps.
//! * [`path`]: the listing from `00…0` to `11…1` built by the four-case
//!   recursion on `n − 2`.
//! * [`gilbreath`]: permutations, pattern containment, the bijection
//!   [`psi`](gilbreath::psi) and the two permutation Gray codes.
//! * [`verify`]: machine-checkable reports for every named listing property.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitword;
pub mod cycle;
mod error;
pub mod gilbreath;
pub mod listing;
pub mod path;
pub mod verify;

pub use bitword::{adjacent, distance_bfs, gap, neighbors, BinaryWord, Gap, DEFAULT_ORACLE_CAP};
pub use cycle::{
    base_cycle, cycle_listing, cycle_stream, extend_even_to_odd, extend_odd_to_even, find_pair, step_segment,
};
pub use error::{Error, Result};
pub use gilbreath::{
    contains_pattern, enumerate_avoiders, perm_gap, perm_listing, psi, psi_inv, standardize, PermGap, Permutation,
    AVOIDER_CAP,
};
pub use listing::{Listing, Segment, SpliceStream, Variant};
pub use path::{base_path, build_case, case_segment, locate_m_n, path_listing, path_stream, CaseSelector, PathCase};
pub use verify::{
    check_binary_properties, check_coverage, check_perm_properties, gap_profile, CheckOptions, GapProfile,
    PermPropertySet, PropertyId, PropertyReport, PropertySet,
};
