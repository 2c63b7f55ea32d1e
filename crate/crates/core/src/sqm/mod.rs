//! Lattice supersymmetric quantum mechanics: superpotentials, ladder
//! operators, partner potentials, the ground-state series and the hierarchy.

mod ground_state;
mod hierarchy;
mod ladder;
mod superpotential;

pub use ground_state::{solve_ground_state_series, ClosedForm, GroundStateSeries};
pub use hierarchy::{hamiltonian_hierarchy, HierarchyMember};
pub use ladder::{
    intertwine, ladder_pair, Intertwined, LadderOperator, LadderPair, SecondOrderOperator,
    ANNIHILATION_THRESHOLD,
};
pub use superpotential::{build_partner_potentials, PartnerPotentials, Superpotential};
