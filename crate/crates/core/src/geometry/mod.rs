//! Exact projective geometry of conics over `Q` and quadratic fields.

pub mod cases;
pub mod conic;
pub mod linalg;
mod literal;
pub mod quadext;

use std::fmt;

use thiserror::Error;

use crate::nodal::NodalError;

pub use cases::{d8_case_suite, d8_eigenspaces, d8_rep, klein_counterexample, D8Eigenspaces, PencilCase, ProjectiveRep};
pub use conic::{
    base_locus, collinear, factor_degenerate, nodal_members, pencil_invariant, pencil_through, same_span, sym2,
    BaseLocus, Conic, Degenerate, Line, NodalMember, ProjPoint,
};
pub use linalg::{Mat, Mat3, Mat6};
pub use quadext::{Field, QuadExt};

/// Why a pencil fails to have four base points in general position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotGeneralReason {
    CommonComponent,
    RepeatedBasePoint,
    ThreeCollinear,
}

impl fmt::Display for NotGeneralReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotGeneralReason::CommonComponent => "common component",
            NotGeneralReason::RepeatedBasePoint => "repeated base point",
            NotGeneralReason::ThreeCollinear => "three collinear",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("cannot parse {input:?}: unexpected {token:?}")]
    Parse { input: String, token: String },
    #[error("all coefficients are zero")]
    Zero,
    #[error("the two conics are proportional and do not span a pencil")]
    NotAPencil,
    #[error("nodal parameter is not rational: {0}")]
    IrrationalNodalParameter(String),
    #[error("every member of the pencil is singular")]
    AllMembersSingular,
    #[error("conic is nonsingular")]
    NotDegenerate,
    #[error("working field is Q(sqrt({field})) and cannot also contain sqrt({radicand})")]
    SecondExtension { field: i64, radicand: i64 },
    #[error("outside supported scope: {0}")]
    OutOfScope(String),
    #[error("pencil is not general: {0}")]
    NotGeneral(NotGeneralReason),
    #[error("not a projective representation: {0}")]
    NotARepresentation(String),
    #[error("representation does not preserve the base locus: {0}")]
    BaseNotPreserved(String),
    #[error(transparent)]
    Nodal(#[from] NodalError),
}
