//! Model domains, their Kobayashi and boundary distances, and the
//! biholomorphisms used to transport points between them.

mod domain;
mod horocycle;
mod moebius;
mod point;
pub mod special;

pub(crate) use domain::disc_distance;
pub use domain::{BaseDomain, Domain};
pub use horocycle::{horocycle_of, Horocycle};
pub use moebius::{cayley, MoebiusMap};
pub use point::Point;
