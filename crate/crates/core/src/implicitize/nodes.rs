use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::polycore::{rat, Rat, RatParam};

/// Points `(x(t), y(t))` for `t = 0, 1, 2, ..`, skipping poles and points
/// already produced.
///
/// A point is hit by at most `d` parameter values when some component of
/// degree `d` is nonconstant, so the scan gives up once the number of misses
/// exceeds what that allows. This only happens for a curve with finitely many
/// points.
#[derive(Clone, Debug)]
pub struct CurveNodes<'a> {
    param: &'a RatParam,
    next_t: i64,
    seen: HashSet<(Rat, Rat)>,
    misses: usize,
    max_repeat: usize,
    poles: usize,
}

impl<'a> CurveNodes<'a> {
    pub fn new(param: &'a RatParam) -> Self {
        let nonconstant = |u: &crate::UniPoly, v: &crate::UniPoly| {
            let d = u.degree_or_zero().max(v.degree_or_zero());
            if d > 0 {
                Some(d)
            } else {
                None
            }
        };
        let max_repeat = nonconstant(param.u1(), param.v1())
            .into_iter()
            .chain(nonconstant(param.u2(), param.v2()))
            .min()
            .unwrap_or(0);
        CurveNodes {
            param,
            next_t: 0,
            seen: HashSet::new(),
            misses: 0,
            max_repeat,
            poles: param.v1().degree_or_zero() + param.v2().degree_or_zero(),
        }
    }
}

impl Iterator for CurveNodes<'_> {
    type Item = (Rat, Rat);

    fn next(&mut self) -> Option<(Rat, Rat)> {
        loop {
            if self.misses > self.seen.len() * self.max_repeat + self.poles {
                return None;
            }
            let t = rat::int(self.next_t);
            self.next_t += 1;
            match self.param.point_at(&t) {
                Some(pt) if !self.seen.contains(&pt) => {
                    self.seen.insert(pt.clone());
                    return Some(pt);
                }
                _ => self.misses += 1,
            }
        }
    }
}

/// The first `count` points of [`CurveNodes`].
pub fn nodes_on_curve(param: &RatParam, count: usize) -> Result<Vec<(Rat, Rat)>> {
    let nodes: Vec<_> = CurveNodes::new(param).take(count).collect();
    if nodes.len() < count {
        return Err(Error::DegenerateParametrization(format!(
            "curve has only {} distinct points",
            nodes.len()
        )));
    }
    Ok(nodes)
}
