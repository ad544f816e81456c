use serde::Serialize;

use crate::analysis::properties::compute_subsets;
use crate::construct::RccLoop;
use crate::error::Result;
use crate::field::Elem;
use crate::loops::{enumerate_normal_subloops, quotient_loop, Loop, Subloop};

/// A loop is simple when its only normal subloops are the trivial one and
/// itself (and it is not trivial).
pub fn is_simple(lp: &Loop) -> bool {
    lp.order() > 1 && enumerate_normal_subloops(lp).len() == 2
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSummary {
    pub order: usize,
    pub normal_subloops: usize,
    pub simple: bool,
}

/// Observed simplicity of the constructed loop against the prediction:
/// simple when `r != 0`; otherwise the center is `{[0,1],[0,-1]}` and the
/// quotient by it is simple.
#[derive(Clone, Debug, Serialize)]
pub struct SimplicityVerdict {
    pub r_is_zero: bool,
    pub normal_subloop_sizes: Vec<usize>,
    pub simple: bool,
    /// 0-based indices.
    pub center: Vec<usize>,
    pub predicted_center: Vec<usize>,
    pub quotient: Option<QuotientSummary>,
    /// Observation agrees with the prediction.
    pub matches: bool,
}

pub fn simplicity_verdict(lp: &RccLoop) -> Result<SimplicityVerdict> {
    let field = lp.field();
    let r_is_zero = lp.quadratic().r.is_zero();
    let base = lp.as_loop();
    let normals = enumerate_normal_subloops(base);
    let simple = base.order() > 1 && normals.len() == 2;
    let center = compute_subsets(base).center;

    if !r_is_zero {
        return Ok(SimplicityVerdict {
            r_is_zero,
            normal_subloop_sizes: normals.iter().map(Subloop::len).collect(),
            simple,
            center,
            predicted_center: vec![base.identity()],
            quotient: None,
            matches: simple,
        });
    }

    let mut predicted_center = vec![
        lp.index_of((Elem::ZERO, Elem::ONE))?,
        lp.index_of((Elem::ZERO, field.neg(Elem::ONE)))?,
    ];
    predicted_center.sort_unstable();
    predicted_center.dedup();
    let quotient = match normals.iter().find(|n| n.members() == center.as_slice()) {
        Some(z) => {
            let quot = quotient_loop(base, z)?.as_loop();
            let count = enumerate_normal_subloops(&quot).len();
            Some(QuotientSummary { order: quot.order(), normal_subloops: count, simple: quot.order() > 1 && count == 2 })
        }
        None => None,
    };
    let matches = !simple && center == predicted_center && quotient.as_ref().is_some_and(|q| q.simple);
    Ok(SimplicityVerdict {
        r_is_zero,
        normal_subloop_sizes: normals.iter().map(Subloop::len).collect(),
        simple,
        center,
        predicted_center,
        quotient,
        matches,
    })
}
