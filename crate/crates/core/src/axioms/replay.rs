//! Witness replay: re-evaluate a recorded violation directly against the
//! measure, bypassing the check machinery. A witness is honest exactly
//! when replaying it still exhibits the violation.

use crate::axioms::Witness;
use crate::domain::{compare, Value};
use crate::measure::Cpm;
use crate::world::Event;

fn le(a: &Value, b: &Value) -> bool {
    compare(a, b).map(|c| c.is_le()).unwrap_or(false)
}

fn ne(a: &Value, b: &Value) -> bool {
    a != b
}

/// True when the witness still demonstrates a violation of its law on
/// `cpm`. Unknown laws and malformed witnesses replay as `false`.
pub fn replay(cpm: &dyn Cpm, witness: &Witness) -> bool {
    let space = cpm.space();
    if witness
        .events
        .iter()
        .any(|e| e.universe() != space.world_count())
    {
        return false;
    }
    let cond = |u: &Event, v: &Event| cpm.cond_opt(u, v);
    let full = Event::full(space);
    let ev = &witness.events;
    let val = &witness.values;

    match witness.law {
        "CPl1" => {
            let [z, v] = &ev[..] else { return false };
            matches!(cond(z, v), Some(got) if ne(&got, &cpm.bottom()))
        }
        "CPl2" => {
            let [w, v] = &ev[..] else { return false };
            matches!(cond(w, v), Some(got) if ne(&got, &cpm.top()))
        }
        "CPl3" => {
            let [u, u2, v] = &ev[..] else { return false };
            if !u.is_subset_of(u2) {
                return false;
            }
            match (cond(u, v), cond(u2, v)) {
                (Some(a), Some(b)) => !le(&a, &b),
                _ => false,
            }
        }
        "CPl4" => {
            let [u, v] = &ev[..] else { return false };
            let lhs = cond(u, v);
            let rhs = cond(&u.intersection(v), v);
            lhs != rhs
        }
        "CPl5" | "lemma-3.2" => {
            let [u, u2, v, vp] = &ev[..] else { return false };
            let c = v.intersection(vp);
            let (Some(a), Some(a2)) = (cond(u, &c), cond(u2, &c)) else {
                return false;
            };
            let (Some(b), Some(b2)) = (
                cond(&u.intersection(v), vp),
                cond(&u2.intersection(v), vp),
            ) else {
                return false;
            };
            le(&a, &a2) != le(&b, &b2)
        }
        "Acc2" => !cpm.is_conditionable(&full),
        "Acc3" => {
            let [u, v] = &ev[..] else { return false };
            u.is_subset_of(v) && cpm.is_conditionable(u) && !cpm.is_conditionable(v)
        }
        "Acc4" => {
            let [u, v] = &ev[..] else { return false };
            match cond(u, v) {
                Some(a) => ne(&a, &cpm.bottom()) && !cpm.is_conditionable(&u.intersection(v)),
                None => false,
            }
        }
        "standard" | "lemma-2.1" => {
            let [u] = &ev[..] else { return false };
            match cond(u, &full) {
                Some(un) => cpm.is_conditionable(u) != ne(&un, &cpm.bottom()),
                None => false,
            }
        }
        "determined" => {
            let [u, v, u2, v2] = &ev[..] else { return false };
            let key = |u: &Event, v: &Event| {
                Some((cond(&u.intersection(v), &full)?, cond(v, &full)?))
            };
            let (Some(k1), Some(k2)) = (key(u, v), key(u2, v2)) else {
                return false;
            };
            let (Some(c1), Some(c2)) = (cond(u, v), cond(u2, v2)) else {
                return false;
            };
            k1 == k2 && c1 != c2
        }
        "Alg1" => {
            let [u, u2, v] = &ev[..] else { return false };
            if !u.is_disjoint_from(u2) {
                return false;
            }
            let (Some(a), Some(b)) = (cond(u, v), cond(u2, v)) else {
                return false;
            };
            let Some(expect) = cond(&u.union(u2), v) else {
                return false;
            };
            match cpm.oplus(&a, &b) {
                None => true,
                Some(s) => ne(&s, &expect),
            }
        }
        "Alg2" => {
            let [u, v, vp] = &ev[..] else { return false };
            let c = v.intersection(vp);
            if !cpm.is_conditionable(&c) {
                return false;
            }
            let (Some(a), Some(e)) = (cond(u, &c), cond(v, vp)) else {
                return false;
            };
            let Some(expect) = cond(&u.intersection(v), vp) else {
                return false;
            };
            match cpm.otimes(&a, &e) {
                None => true,
                Some(p) => ne(&p, &expect),
            }
        }
        "Alg3" => {
            let [a, b, b2, ..] = &val[..] else { return false };
            let Some(s) = cpm.oplus(b, b2) else {
                return false;
            };
            let (Some(ab), Some(ab2)) = (cpm.otimes(a, b), cpm.otimes(a, b2)) else {
                return false;
            };
            let lhs = cpm.otimes(a, &s);
            let rhs = cpm.oplus(&ab, &ab2);
            lhs.is_none() || lhs != rhs
        }
        "Alg4" | "Alg4'" => {
            let [a, b, c, ..] = &val[..] else { return false };
            if !ne(c, &cpm.bottom()) {
                return false;
            }
            let (Some(pa), Some(pb)) = (cpm.otimes(a, c), cpm.otimes(b, c)) else {
                return false;
            };
            le(&pa, &pb) && !le(a, b)
        }
        "monotonic" | "monotonic-unrestricted" => {
            let [d, e, d2, e2, ..] = &val[..] else { return false };
            if !le(d, d2) || !le(e, e2) {
                return false;
            }
            let (Some(p), Some(p2)) = (cpm.otimes(d, e), cpm.otimes(d2, e2)) else {
                return false;
            };
            !le(&p, &p2)
        }
        _ => false,
    }
}
