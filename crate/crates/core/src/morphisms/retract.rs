use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ElementMap;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;
use crate::text::parse_element;

/// Emission bound for infinite families when none is given.
pub const DEFAULT_RETRACT_BOUND: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RetractKind {
    Identity,
    TrivialConstant(Element),
    /// Cutoffs `>= i`.
    UpperFamily(u64),
    /// The bicyclic copy at cutoff `j`.
    SingleCutoff(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractDescriptor {
    pub kind: RetractKind,
    pub trivial: bool,
}

impl RetractDescriptor {
    fn new(kind: RetractKind) -> Self {
        let trivial = matches!(
            kind,
            RetractKind::Identity | RetractKind::TrivialConstant(_)
        );
        RetractDescriptor { kind, trivial }
    }

    /// Whether `e` belongs to the retract.
    pub fn contains(&self, e: &Element) -> bool {
        match self.kind {
            RetractKind::Identity => true,
            RetractKind::TrivialConstant(c) => *e == c,
            RetractKind::UpperFamily(i) => e.a() >= i,
            RetractKind::SingleCutoff(j) => e.a() == j,
        }
    }

    /// A retraction onto the carrier.
    pub fn witness_map(&self) -> ElementMap {
        match self.kind {
            RetractKind::Identity => ElementMap::Identity,
            RetractKind::TrivialConstant(c) => ElementMap::Constant(c),
            RetractKind::UpperFamily(i) => ElementMap::Retraction { k: i },
            RetractKind::SingleCutoff(j) => ElementMap::EmbedProject { a: j },
        }
    }

    /// The same descriptor with cutoffs moved up by `shift`.
    pub fn shifted(&self, shift: u64) -> Self {
        let kind = match self.kind {
            RetractKind::Identity => RetractKind::Identity,
            RetractKind::TrivialConstant(c) => {
                RetractKind::TrivialConstant(c.with_cutoff(c.a() + shift))
            }
            RetractKind::UpperFamily(i) => RetractKind::UpperFamily(i + shift),
            RetractKind::SingleCutoff(j) => RetractKind::SingleCutoff(j + shift),
        };
        RetractDescriptor::new(kind)
    }
}

impl fmt::Display for RetractKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RetractKind::Identity => f.write_str("Identity"),
            RetractKind::TrivialConstant(e) => write!(f, "TrivialConstant{e}"),
            RetractKind::UpperFamily(i) => write!(f, "UpperFamily({i})"),
            RetractKind::SingleCutoff(j) => write!(f, "SingleCutoff({j})"),
        }
    }
}

impl fmt::Display for RetractDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

impl FromStr for RetractKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            column: 1,
            message: format!("unknown retract kind '{s}'"),
        };
        let number = |rest: &str| -> Result<u64> {
            rest.strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|n| n.trim().parse().ok())
                .ok_or_else(bad)
        };
        if s == "Identity" {
            Ok(RetractKind::Identity)
        } else if let Some(rest) = s.strip_prefix("TrivialConstant") {
            Ok(RetractKind::TrivialConstant(parse_element(rest)?))
        } else if let Some(rest) = s.strip_prefix("UpperFamily") {
            Ok(RetractKind::UpperFamily(number(rest)?))
        } else if let Some(rest) = s.strip_prefix("SingleCutoff") {
            Ok(RetractKind::SingleCutoff(number(rest)?))
        } else {
            Err(bad())
        }
    }
}

impl Serialize for RetractKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RetractKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Homomorphic retracts of a canonical family: the trivial ones (identity and
/// the constant onto the unit), then `UpperFamily(i)` for `i >= 1` and
/// `SingleCutoff(j)` for every cutoff.
///
/// When the largest cutoff is 1 the upper family coincides with a single
/// cutoff and only the two `SingleCutoff` entries are listed. Infinite
/// families are listed up to `bound`.
pub fn enumerate_retracts(fam: &NormalizedFamily, bound: u64) -> Result<Vec<RetractDescriptor>> {
    if !fam.is_canonical() {
        return Err(Error::NotCanonical(fam.to_string()));
    }
    let mut out = vec![
        RetractDescriptor::new(RetractKind::Identity),
        RetractDescriptor::new(RetractKind::TrivialConstant(Element::unit(fam))),
    ];
    let top = fam.hi().unwrap_or(bound);
    if top == 0 {
        return Ok(out);
    }
    if top >= 2 || !fam.is_finite() {
        out.extend((1..=top).map(|i| RetractDescriptor::new(RetractKind::UpperFamily(i))));
    }
    out.extend((0..=top).map(|j| RetractDescriptor::new(RetractKind::SingleCutoff(j))));
    Ok(out)
}
