//! The natural partial order and the Hasse diagram of the idempotent semilattice.

use std::collections::BTreeSet;

use crate::ball::BallUniverse;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;

/// `s ≼ t` in the natural partial order, decided as `s = t · (s⁻¹ s)`.
pub fn natural_leq(s: Element, t: Element, fam: &NormalizedFamily) -> Result<bool> {
    fam.check(s.a())?;
    fam.check(t.a())?;
    let e = s
        .inverse()
        .checked_mul(s)
        .ok_or(Error::Overflow(s.inverse(), s))?;
    let te = t.checked_mul(e).ok_or(Error::Overflow(t, e))?;
    Ok(te == s)
}

/// Closed form of the order on idempotents: `(p,p,[a)) ≼ (q,q,[b))` iff
/// `p >= q` and `p + a >= q + b`.
pub fn idempotent_leq(e1: Element, e2: Element) -> Result<bool> {
    for e in [e1, e2] {
        if !e.is_idempotent() {
            return Err(Error::NotIdempotent(e));
        }
    }
    let (p, a) = (e1.i() as u128, e1.a() as u128);
    let (q, b) = (e2.i() as u128, e2.a() as u128);
    Ok(p >= q && p + a >= q + b)
}

/// Cover relation of `(E, ≼)` restricted to the ball's idempotents, as
/// `(upper, lower)` pairs in canonical order.
///
/// Covers are obtained by transitive reduction of the order on the ball, so a
/// pair is reported when no ball idempotent lies strictly between them.
pub fn hasse_covers(ball: &BallUniverse) -> Vec<(Element, Element)> {
    let ids: Vec<Element> = ball.idempotents().collect();
    let n = ids.len();
    let lt = |x: usize, y: usize| x != y && idempotent_leq(ids[x], ids[y]).unwrap_or(false);
    let strictly_below: Vec<Vec<bool>> =
        (0..n).map(|x| (0..n).map(|y| lt(x, y)).collect()).collect();
    let mut covers = BTreeSet::new();
    for upper in 0..n {
        for lower in 0..n {
            if !strictly_below[lower][upper] {
                continue;
            }
            let between = (0..n).any(|m| strictly_below[lower][m] && strictly_below[m][upper]);
            if !between {
                covers.insert((ids[upper], ids[lower]));
            }
        }
    }
    covers.into_iter().collect()
}

/// Graphviz rendering of [`hasse_covers`]: edges run from the larger idempotent
/// to the one it covers; nodes and edges are sorted.
pub fn hasse_dot(ball: &BallUniverse) -> String {
    let covers = hasse_covers(ball);
    let mut out = String::from("digraph hasse {\n");
    for e in ball.idempotents() {
        out.push_str(&format!("  \"{e}\";\n"));
    }
    for (u, l) in covers {
        out.push_str(&format!("  \"{u}\" -> \"{l}\";\n"));
    }
    out.push_str("}\n");
    out
}
