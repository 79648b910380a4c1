//! Graph constructions: the Fowler gadget, 4-fold subdivision, circulants
//! and the antiprism family.

mod circulant;
mod fowler;

pub use circulant::{
    antiprism, antiprism_eigenvalue, antiprism_kernel_closed_form, antiprism_nullity,
    antiprism_propagate, circulant, circulant_eigenvalues, cycle, CirculantSpec, LinearForm,
};
pub use fowler::{fowler, fowler_lift, subdivide_4fold, FowlerSite};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} is isolated; the Fowler construction needs degree at least 1")]
    IsolatedVertex(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vector has length {found}, expected {expected}")]
    Dimension { found: usize, expected: usize },
    #[error("{family} needs n >= {min}, got {n}")]
    OrderTooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("circulant offset {offset} is outside 1..={max}")]
    OffsetOutOfRange { offset: usize, max: usize },
    #[error("circulant offset {0} listed twice")]
    DuplicateOffset(usize),
}
