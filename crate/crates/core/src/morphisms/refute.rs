use serde::{Deserialize, Serialize};

use super::{ElementMap, Value};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;

/// The three admissible images of `(0,0,[k+1))`, as case numbers.
pub const WITNESS_CASES: [u8; 3] = [1, 2, 3];

/// A pair on which a candidate retraction fails to be multiplicative:
/// `lhs = m(x·y)` differs from `rhs = m(x)·m(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationWitness {
    pub case_id: u8,
    pub x: Element,
    pub y: Element,
    pub lhs: Element,
    pub rhs: Element,
}

impl RefutationWitness {
    /// Recomputes both sides from the candidate map.
    pub fn recheck(&self, k: u64) -> Result<bool> {
        let m = ElementMap::ForcedCandidate {
            case: self.case_id,
            k,
        };
        let lhs = m.apply_self(self.x * self.y)?;
        let rhs = m.apply_self(self.x)? * m.apply_self(self.y)?;
        Ok(lhs == self.lhs && rhs == self.rhs && lhs != rhs)
    }
}

/// One witness per candidate image of `(0,0,[k+1))` under a retraction onto
/// the cutoffs `<= k`, each showing the candidate is not a homomorphism.
///
/// All three use `x = (1,1,[k-1))` and `y = (0,0,[k+1))`.
pub fn refute_lower_retraction(k: u64, fam: &NormalizedFamily) -> Result<[RefutationWitness; 3]> {
    let admissible = k >= 1 && [k - 1, k, k + 1].iter().all(|&c| fam.contains(c));
    if !admissible {
        return Err(Error::RefutationPrecondition {
            k,
            family: fam.to_string(),
        });
    }
    let x = Element::new(1, 1, k - 1);
    let y = Element::new(0, 0, k + 1);
    let witness = |case_id: u8| -> Result<RefutationWitness> {
        let m = ElementMap::ForcedCandidate { case: case_id, k };
        let lhs = m.eval(Value::Triple(x * y))?;
        let rhs = m
            .eval(Value::Triple(x))?
            .checked_mul(m.eval(Value::Triple(y))?)?;
        let (Some(lhs), Some(rhs)) = (lhs.triple(), rhs.triple()) else {
            return Err(Error::NotSelfMap(m.name()));
        };
        debug_assert_ne!(lhs, rhs);
        Ok(RefutationWitness {
            case_id,
            x,
            y,
            lhs,
            rhs,
        })
    };
    Ok([witness(1)?, witness(2)?, witness(3)?])
}
