use serde::Serialize;

use super::superpotential::build_partner_potentials;
use crate::error::{Error, Result};
use crate::ops::PowerSum;
use crate::shape::{check_shape_invariance, ShapeInvariantModel};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HierarchyMember {
    /// 1-based position in the hierarchy.
    pub s: usize,
    pub parameter: f64,
    /// `W² - pΔ¹W` at `a_s`.
    pub potential: PowerSum,
    /// `Σ_{k<s} R(a_k)`.
    pub offset: f64,
}

/// `H^(s) = -p²Δ² + V(a_s) + offset_s` for `s = 1..=depth`.
pub fn hamiltonian_hierarchy(
    model: &dyn ShapeInvariantModel,
    a1: f64,
    depth: usize,
) -> Result<Vec<HierarchyMember>> {
    if depth == 0 {
        return Err(Error::InvalidArgument("hierarchy depth must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(depth);
    let mut a = a1;
    let mut offset = 0.0;
    for s in 1..=depth {
        out.push(HierarchyMember {
            s,
            parameter: a,
            potential: build_partner_potentials(&model.superpotential(a)).v_minus,
            offset,
        });
        if s < depth {
            let check = check_shape_invariance(model, a);
            if !check.holds {
                return Err(Error::NotShapeInvariant {
                    parameter: a,
                    residual: check.residual.to_string(),
                });
            }
            offset += check.rest_extracted;
            a = check.partner_parameter;
        }
    }
    Ok(out)
}
