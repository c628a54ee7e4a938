//! The explicit extremal configurations: the Hesse configuration, the skew
//! triangular lattice, the Eisenstein plane arrangement and the
//! dodecahedral α-system over ℍ.

mod dodeca;
mod hesse;
mod lattice;

pub use dodeca::{dodeca_labelings, dodeca_system, dodeca_vertices, tetrahedron_edges, DodecaSystem, UNORDERED_PAIRS};
pub use hesse::hesse_points;
pub use lattice::{
    check_closure_random, check_eisenstein, check_tri_lattice, closure_coefficients, closure_identity_holds,
    closure_third, eisenstein_plane_list, eisenstein_planes, eisenstein_ring, rho_pow, tri_lattice, Closure,
    EisensteinPlane, InteriorCheck,
};
