//! Equivariant counts of nodal conics in pencils invariant under a finite
//! group, valued in the Burnside ring of the group.

pub mod burnside;
pub mod cli;
pub mod geometry;
pub mod nodal;
pub mod permgroup;
