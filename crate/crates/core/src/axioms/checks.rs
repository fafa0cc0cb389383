//! The law sweeps. Each checker enumerates the tuples its law quantifies
//! over (exhaustively on small spaces, via the shared sampled universe
//! otherwise), counts every instance it evaluates, and records capped
//! witness lists for violations.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rand::Rng;

use crate::axioms::table::{Ctx, PairSet, UNDEF};
use crate::axioms::{CheckOptions, CheckReport, CheckStatus, LawResult, SuiteReport, Witness};
use crate::error::Error;
use crate::measure::Cpm;
use crate::sampling::seeded_rng;

/// Cap on probes for the informational off-domain sweeps when they fall
/// back to sampling; keeps their memo tables small.
const INFO_SAMPLE_CAP: u64 = 200_000;

struct LawRun {
    law: &'static str,
    required: bool,
    checked: u64,
    failed: bool,
    witnesses: Vec<Witness>,
    cap: usize,
    note: Option<String>,
}

impl LawRun {
    fn new(law: &'static str, required: bool, opts: &CheckOptions) -> LawRun {
        LawRun {
            law,
            required,
            checked: 0,
            failed: false,
            witnesses: Vec::new(),
            cap: opts.witness_cap.max(1),
            note: None,
        }
    }

    fn tick(&mut self) {
        self.checked += 1;
    }

    /// Record a violation. Event indices resolve against the universe;
    /// `UNDEF` ids are dropped from the value list.
    fn fail(&mut self, ctx: &Ctx, event_idxs: &[usize], ids: &[u32], note: String) {
        self.failed = true;
        if self.witnesses.len() < self.cap {
            self.witnesses.push(Witness {
                law: self.law,
                events: event_idxs.iter().map(|&i| ctx.ev(i).clone()).collect(),
                values: ids
                    .iter()
                    .filter(|&&id| id != UNDEF)
                    .map(|&id| ctx.value(id).clone())
                    .collect(),
                note,
            });
        }
    }

    fn finish(self) -> LawResult {
        LawResult {
            law: self.law,
            status: if self.failed {
                CheckStatus::Fail
            } else {
                CheckStatus::Pass
            },
            required: self.required,
            checked: self.checked,
            witnesses: self.witnesses,
            note: self.note,
        }
    }
}

fn skipped(law: &'static str, note: &str) -> LawResult {
    LawResult {
        law,
        status: CheckStatus::Skipped,
        required: false,
        checked: 0,
        witnesses: Vec::new(),
        note: Some(note.to_string()),
    }
}

fn report(check: &'static str, cpm: &dyn Cpm, laws: Vec<LawResult>) -> CheckReport {
    CheckReport {
        check,
        measure: cpm.name().to_string(),
        laws,
    }
}

/// `Pl(events[a] ∩ events[b] | events[v])`, falling back to a direct
/// query when the intersection lies outside a sampled universe.
fn cond_of_inter(ctx: &mut Ctx, a: usize, b: usize, v: usize) -> u32 {
    match ctx.inter_idx(a, b) {
        Some(k) => ctx.cond_id(k, v),
        None => {
            let e = ctx.ev(a).intersection(ctx.ev(b));
            ctx.cond_id_ev(&e, v)
        }
    }
}

fn cond_of_union(ctx: &mut Ctx, a: usize, b: usize, v: usize) -> u32 {
    match ctx.union_idx(a, b) {
        Some(k) => ctx.cond_id(k, v),
        None => {
            let e = ctx.ev(a).union(ctx.ev(b));
            ctx.cond_id_ev(&e, v)
        }
    }
}

/// Visit all ordered pairs `(i, j)` with `events[i] ⊆ events[j]`.
fn for_subset_pairs(ctx: &Ctx, mut body: impl FnMut(usize, usize)) {
    let n = ctx.len();
    if ctx.exhaustive {
        for j in 0..n {
            let mut i = j;
            loop {
                body(i, j);
                if i == 0 {
                    break;
                }
                i = (i - 1) & j;
            }
        }
    } else {
        for i in 0..n {
            for j in 0..n {
                if ctx.is_subset(i, j) {
                    body(i, j);
                }
            }
        }
    }
}

/// Visit all ordered pairs `(i, j)` of disjoint events.
fn for_disjoint_pairs(ctx: &Ctx, mut body: impl FnMut(usize, usize)) {
    let n = ctx.len();
    if ctx.exhaustive {
        let full = n - 1;
        for i in 0..n {
            let comp = full ^ i;
            let mut j = comp;
            loop {
                body(i, j);
                if j == 0 {
                    break;
                }
                j = (j - 1) & comp;
            }
        }
    } else {
        for i in 0..n {
            for j in 0..n {
                if ctx.is_disjoint(i, j) {
                    body(i, j);
                }
            }
        }
    }
}

fn cpl_laws(ctx: &mut Ctx, opts: &CheckOptions) -> Vec<LawResult> {
    let n = ctx.len();
    let mut cpl1 = LawRun::new("CPl1", true, opts);
    let mut cpl2 = LawRun::new("CPl2", true, opts);
    let mut cpl3 = LawRun::new("CPl3", true, opts);
    let mut cpl4 = LawRun::new("CPl4", true, opts);

    for v in 0..n {
        if !ctx.conditionable[v] {
            continue;
        }
        cpl1.tick();
        let at_empty = ctx.cond_id(ctx.empty_idx, v);
        if at_empty != ctx.bottom {
            cpl1.fail(
                ctx,
                &[ctx.empty_idx, v],
                &[at_empty, ctx.bottom],
                "Pl(empty | V) is not the bottom element".into(),
            );
        }
        cpl2.tick();
        let at_full = ctx.cond_id(ctx.full_idx, v);
        if at_full != ctx.top {
            cpl2.fail(
                ctx,
                &[ctx.full_idx, v],
                &[at_full, ctx.top],
                "Pl(W | V) is not the top element".into(),
            );
        }
        for u in 0..n {
            cpl4.tick();
            let lhs = ctx.cond_id(u, v);
            let rhs = cond_of_inter(ctx, u, v, v);
            if lhs != rhs {
                cpl4.fail(
                    ctx,
                    &[u, v],
                    &[lhs, rhs],
                    "Pl(U | V) differs from Pl(U ∩ V | V)".into(),
                );
            }
        }
    }

    // CPl3 wants the subset sweep per conditionable event; collect the
    // pair visits once and re-run the order test on each context.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for_subset_pairs(ctx, |i, j| pairs.push((i, j)));
    for v in 0..n {
        if !ctx.conditionable[v] {
            continue;
        }
        for &(i, j) in &pairs {
            cpl3.tick();
            let a = ctx.cond_id(i, v);
            let b = ctx.cond_id(j, v);
            if a == UNDEF || b == UNDEF || !ctx.le(a, b) {
                cpl3.fail(
                    ctx,
                    &[i, j, v],
                    &[a, b],
                    "U ⊆ U' but Pl(U | V) is not below Pl(U' | V)".into(),
                );
            }
        }
    }

    vec![cpl1.finish(), cpl2.finish(), cpl3.finish(), cpl4.finish()]
}

fn coherence_law(ctx: &mut Ctx, opts: &CheckOptions) -> LawResult {
    let n = ctx.len();
    let mut law = LawRun::new("CPl5", true, opts);
    let mut entries: Vec<(u64, u32)> = Vec::new();
    for vp in 0..n {
        if !ctx.conditionable[vp] {
            continue;
        }
        for v in 0..n {
            let c = match ctx.inter_idx(v, vp) {
                Some(c) => c,
                None => continue,
            };
            if !ctx.conditionable[c] {
                continue;
            }
            // One entry per distinct pair (Pl(U | V ∩ V'), Pl(U ∩ V | V')),
            // with a representative U; the biconditional only sees values.
            entries.clear();
            for u in 0..n {
                let a = ctx.cond_id(u, c);
                let b = cond_of_inter(ctx, u, v, vp);
                if a == UNDEF || b == UNDEF {
                    continue;
                }
                entries.push(((a as u64) << 32 | b as u64, u as u32));
            }
            entries.sort_unstable_by_key(|&(k, _)| k);
            entries.dedup_by_key(|&mut (k, _)| k);
            for x in 0..entries.len() {
                let (kx, ux) = entries[x];
                let (ax, bx) = ((kx >> 32) as u32, kx as u32);
                for y in 0..entries.len() {
                    if x == y {
                        continue;
                    }
                    let (ky, uy) = entries[y];
                    let (ay, by) = ((ky >> 32) as u32, ky as u32);
                    law.tick();
                    let lhs = ctx.le(ax, ay);
                    let rhs = ctx.le(bx, by);
                    if lhs != rhs {
                        law.fail(
                            ctx,
                            &[ux as usize, uy as usize, v, vp],
                            &[ax, ay, bx, by],
                            format!(
                                "Pl(U | V ∩ V') ≤ Pl(U' | V ∩ V') is {lhs} \
                                 but Pl(U ∩ V | V') ≤ Pl(U' ∩ V | V') is {rhs}"
                            ),
                        );
                    }
                }
            }
        }
    }
    law.finish()
}

fn acceptable_laws(ctx: &mut Ctx, opts: &CheckOptions) -> Vec<LawResult> {
    let n = ctx.len();

    let mut acc1 = LawRun::new("Acc1", true, opts);
    acc1.tick();
    acc1.note = Some("the event family is the full powerset by construction".into());

    let mut acc2 = LawRun::new("Acc2", true, opts);
    acc2.checked = n as u64;
    if ctx.conditionable_count() == 0 {
        acc2.failed = true;
        acc2.witnesses.push(Witness {
            law: "Acc2",
            events: Vec::new(),
            values: Vec::new(),
            note: "no event is conditionable".into(),
        });
    }

    let mut acc3 = LawRun::new("Acc3", true, opts);
    let mut bad: Vec<(usize, usize)> = Vec::new();
    let mut count = 0u64;
    for_subset_pairs(ctx, |i, j| {
        count += 1;
        if ctx.conditionable[i] && !ctx.conditionable[j] {
            bad.push((i, j));
        }
    });
    acc3.checked = count;
    for (i, j) in bad {
        acc3.fail(
            ctx,
            &[i, j],
            &[],
            "U is conditionable but its superset V is not".into(),
        );
    }

    let mut acc4 = LawRun::new("Acc4", true, opts);
    for v in 0..n {
        if !ctx.conditionable[v] {
            continue;
        }
        for u in 0..n {
            acc4.tick();
            let id = ctx.cond_id(u, v);
            if id == ctx.bottom || id == UNDEF {
                continue;
            }
            let ok = match ctx.inter_idx(u, v) {
                Some(k) => ctx.conditionable[k],
                None => {
                    let e = ctx.ev(u).intersection(ctx.ev(v));
                    ctx.cpm.is_conditionable(&e)
                }
            };
            if !ok {
                acc4.fail(
                    ctx,
                    &[u, v],
                    &[id],
                    "Pl(U | V) is above bottom but U ∩ V is not conditionable".into(),
                );
            }
        }
    }

    vec![acc1.finish(), acc2.finish(), acc3.finish(), acc4.finish()]
}

fn standard_law(ctx: &mut Ctx, opts: &CheckOptions) -> LawResult {
    let n = ctx.len();
    let mut law = LawRun::new("standard", true, opts);
    let w = ctx.full_idx;
    if !ctx.conditionable[w] {
        law.failed = true;
        law.witnesses.push(Witness {
            law: "standard",
            events: vec![ctx.ev(w).clone()],
            values: Vec::new(),
            note: "the full event is not conditionable, so unconditional values do not exist"
                .into(),
        });
        return law.finish();
    }
    for u in 0..n {
        law.tick();
        let un = ctx.cond_id(u, w);
        let nonbottom = un != ctx.bottom;
        if ctx.conditionable[u] != nonbottom {
            let note = if nonbottom {
                "U has nonbottom unconditional plausibility but is not conditionable"
            } else {
                "U is conditionable but its unconditional plausibility is bottom"
            };
            law.fail(ctx, &[u], &[un], note.into());
        }
    }
    law.finish()
}

fn determined_law(ctx: &mut Ctx, opts: &CheckOptions) -> LawResult {
    let n = ctx.len();
    let mut law = LawRun::new("determined", true, opts);
    let w = ctx.full_idx;
    if !ctx.conditionable[w] {
        return skipped("determined", "the full event is not conditionable");
    }
    // key (Pl(U ∩ V | W), Pl(V | W)) -> (Pl(U | V), U, V)
    let mut seen: HashMap<(u32, u32), (u32, u32, u32)> = HashMap::new();
    for v in 0..n {
        if !ctx.conditionable[v] {
            continue;
        }
        let kv = ctx.cond_id(v, w);
        for u in 0..n {
            law.tick();
            let ku = cond_of_inter(ctx, u, v, w);
            let val = ctx.cond_id(u, v);
            match seen.entry((ku, kv)) {
                Entry::Occupied(e) => {
                    let &(pval, pu, pv) = e.get();
                    if pval != val {
                        law.fail(
                            ctx,
                            &[u, v, pu as usize, pv as usize],
                            &[ku, kv, val, pval],
                            "equal unconditional pairs yield different conditional values"
                                .into(),
                        );
                    }
                }
                Entry::Vacant(e) => {
                    e.insert((val, u as u32, v as u32));
                }
            }
        }
    }
    law.finish()
}

/// Alg1/Alg2 sweeps, materializing `Dom(⊕)` and `Dom(⊗)` along the way,
/// then Alg3/Alg4 over the materialized domains and the informational
/// unrestricted-cancellation probe.
fn algebraic_laws(ctx: &mut Ctx, opts: &CheckOptions) -> (Vec<LawResult>, PairSet) {
    let n = ctx.len();

    let mut alg1 = LawRun::new("Alg1", true, opts);
    let mut dom_plus = PairSet::new(ctx.base);
    let mut disjoint: Vec<(usize, usize)> = Vec::new();
    for_disjoint_pairs(ctx, |i, j| disjoint.push((i, j)));
    for v in 0..n {
        if !ctx.conditionable[v] {
            continue;
        }
        for &(u, u2) in &disjoint {
            alg1.tick();
            let a = ctx.cond_id(u, v);
            let b = ctx.cond_id(u2, v);
            dom_plus.insert(a, b);
            let expect = cond_of_union(ctx, u, u2, v);
            match ctx.oplus_id(a, b) {
                None => alg1.fail(
                    ctx,
                    &[u, u2, v],
                    &[a, b],
                    "the sum of two in-domain plausibilities is undefined".into(),
                ),
                Some(s) if s != expect => alg1.fail(
                    ctx,
                    &[u, u2, v],
                    &[a, b, s, expect],
                    "Pl(U | V) ⊕ Pl(U' | V) differs from Pl(U ∪ U' | V)".into(),
                ),
                _ => {}
            }
        }
    }

    alg1.note = Some(format!("Dom(⊕) holds {} value pairs", dom_plus.len()));

    let mut alg2 = LawRun::new("Alg2", true, opts);
    let dom_times = sweep_alg2(ctx, Some(&mut alg2));
    alg2.note = Some(format!("Dom(⊗) holds {} value pairs", dom_times.len()));

    let mut alg3 = LawRun::new("Alg3", true, opts);
    let plus_pairs = {
        let mut p = dom_plus.pairs();
        p.sort_unstable();
        p
    };
    // Only values that appear on the left of Dom(⊗) can satisfy the
    // side conditions; prefilter to keep the triple loop cheap.
    let times_pairs = {
        let mut p = dom_times.pairs();
        p.sort_unstable();
        p
    };
    let mut left_of_times = vec![false; ctx.base];
    for &(a, _) in &times_pairs {
        left_of_times[a as usize] = true;
    }
    for &(b, b2) in &plus_pairs {
        let s = match ctx.oplus_id(b, b2) {
            Some(s) => s,
            None => continue,
        };
        for a in 0..ctx.base as u32 {
            if !left_of_times[a as usize] {
                continue;
            }
            if !dom_times.contains(a, b) || !dom_times.contains(a, b2) {
                continue;
            }
            if !dom_times.contains(a, s) {
                continue;
            }
            let ab = ctx.otimes_id(a, b);
            let ab2 = ctx.otimes_id(a, b2);
            let (ab, ab2) = match (ab, ab2) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            if !dom_plus.contains(ab, ab2) {
                continue;
            }
            alg3.tick();
            let lhs = ctx.otimes_id(a, s);
            let rhs = ctx.oplus_id(ab, ab2);
            if lhs.is_none() || lhs != rhs {
                alg3.fail(
                    ctx,
                    &[],
                    &[
                        a,
                        b,
                        b2,
                        lhs.unwrap_or(UNDEF),
                        rhs.unwrap_or(UNDEF),
                    ],
                    "a ⊗ (b ⊕ b') differs from (a ⊗ b) ⊕ (a ⊗ b') on an in-domain triple"
                        .into(),
                );
            }
        }
    }

    let mut alg4 = LawRun::new("Alg4", true, opts);
    let mut by_c: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(a, c) in &times_pairs {
        by_c.entry(c).or_default().push(a);
    }
    let mut cs: Vec<u32> = by_c.keys().copied().collect();
    cs.sort_unstable();
    for c in cs {
        if c == ctx.bottom {
            continue;
        }
        let left = &by_c[&c];
        let mut prods: Vec<(u32, u32)> = Vec::with_capacity(left.len());
        for &a in left {
            match ctx.otimes_id(a, c) {
                Some(p) => prods.push((a, p)),
                None => {
                    // An in-domain product that fails to exist is an Alg2
                    // violation; Alg4 has nothing to compare.
                    continue;
                }
            }
        }
        for &(a, pa) in &prods {
            for &(b, pb) in &prods {
                alg4.tick();
                if ctx.le(pa, pb) && !ctx.le(a, b) {
                    alg4.fail(
                        ctx,
                        &[],
                        &[a, b, c, pa, pb],
                        "a ⊗ c ≤ b ⊗ c with c above bottom, but a is not ≤ b".into(),
                    );
                }
            }
        }
    }

    let alg4p = alg4_prime_probe(ctx, opts);

    (
        vec![
            alg1.finish(),
            alg2.finish(),
            alg3.finish(),
            alg4.finish(),
            alg4p,
        ],
        dom_times,
    )
}

/// The Alg2 sweep doubles as the `Dom(⊗)` materializer; `law` is absent
/// when only the domain is needed.
fn sweep_alg2(ctx: &mut Ctx, law: Option<&mut LawRun>) -> PairSet {
    let n = ctx.len();
    let mut dom_times = PairSet::new(ctx.base);
    let mut alg2 = law;
    for vp in 0..n {
        if !ctx.conditionable[vp] {
            continue;
        }
        for v in 0..n {
            let vid = ctx.cond_id(v, vp);
            match ctx.inter_idx(v, vp) {
                Some(c) => {
                    if !ctx.conditionable[c] {
                        continue;
                    }
                    for u in 0..n {
                        let a = ctx.cond_id(u, c);
                        dom_times.insert(a, vid);
                        if let Some(run) = alg2.as_deref_mut() {
                            run.tick();
                            let expect = cond_of_inter(ctx, u, v, vp);
                            check_alg2_instance(ctx, run, (u, v, vp), a, vid, expect);
                        }
                    }
                }
                None => {
                    let ce = ctx.ev(v).intersection(ctx.ev(vp));
                    if !ctx.cpm.is_conditionable(&ce) {
                        continue;
                    }
                    for u in 0..n {
                        let ue = ctx.ev(u).clone();
                        let a = ctx.cond_id_raw(&ue, &ce);
                        if a == UNDEF {
                            continue;
                        }
                        dom_times.insert(a, vid);
                        if let Some(run) = alg2.as_deref_mut() {
                            run.tick();
                            let ie = ue.intersection(ctx.ev(v));
                            let expect = ctx.cond_id_ev(&ie, vp);
                            check_alg2_instance(ctx, run, (u, v, vp), a, vid, expect);
                        }
                    }
                }
            }
        }
    }
    dom_times
}

fn check_alg2_instance(
    ctx: &mut Ctx,
    run: &mut LawRun,
    (u, v, vp): (usize, usize, usize),
    a: u32,
    vid: u32,
    expect: u32,
) {
    match ctx.otimes_id(a, vid) {
        None => run.fail(
            ctx,
            &[u, v, vp],
            &[a, vid],
            "the product of two in-domain plausibilities is undefined".into(),
        ),
        Some(p) if p != expect => run.fail(
            ctx,
            &[u, v, vp],
            &[a, vid, p, expect],
            "Pl(U | V ∩ V') ⊗ Pl(V | V') differs from Pl(U ∩ V | V')".into(),
        ),
        _ => {}
    }
}

/// Unrestricted cancellation: a ⊗ c ≤ b ⊗ c with c above bottom should
/// force a ≤ b even for value pairs outside Dom(⊗). Informational.
fn alg4_prime_probe(ctx: &mut Ctx, opts: &CheckOptions) -> LawResult {
    let mut law = LawRun::new("Alg4'", false, opts);
    let base = ctx.base as u32;
    let total = (base as u64).pow(3);
    if total <= opts.probe_budget {
        for c in 0..base {
            if c == ctx.bottom {
                continue;
            }
            let prods: Vec<Option<u32>> = (0..base).map(|a| ctx.otimes_id(a, c)).collect();
            for a in 0..base {
                let pa = match prods[a as usize] {
                    Some(p) => p,
                    None => continue,
                };
                for b in 0..base {
                    let pb = match prods[b as usize] {
                        Some(p) => p,
                        None => continue,
                    };
                    law.tick();
                    if ctx.le(pa, pb) && !ctx.le(a, b) {
                        law.fail(
                            ctx,
                            &[],
                            &[a, b, c, pa, pb],
                            "cancellation fails without the domain restriction".into(),
                        );
                    }
                }
            }
        }
    } else {
        let probes = opts.probe_budget.min(INFO_SAMPLE_CAP);
        let mut rng = seeded_rng(opts.seed);
        for _ in 0..probes {
            let a = rng.gen_range(0..base);
            let b = rng.gen_range(0..base);
            let c = rng.gen_range(0..base);
            if c == ctx.bottom {
                continue;
            }
            let (pa, pb) = match (ctx.otimes_id(a, c), ctx.otimes_id(b, c)) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            law.tick();
            if ctx.le(pa, pb) && !ctx.le(a, b) {
                law.fail(
                    ctx,
                    &[],
                    &[a, b, c, pa, pb],
                    "cancellation fails without the domain restriction".into(),
                );
            }
        }
        law.note = Some(format!("sampled {probes} of {total} value triples"));
    }
    law.finish()
}

fn monotonic_laws(ctx: &mut Ctx, opts: &CheckOptions, dom_times: &PairSet) -> Vec<LawResult> {
    let mut mono = LawRun::new("monotonic", true, opts);
    let mut pairs = dom_times.pairs();
    pairs.sort_unstable();
    let prods: Vec<Option<u32>> = pairs
        .iter()
        .map(|&(d, e)| ctx.otimes_id(d, e))
        .collect();
    let quads = (pairs.len() as u64).pow(2);
    let budget = opts.probe_budget.max(1).saturating_mul(64);
    if quads <= budget {
        for i in 0..pairs.len() {
            let (d, e) = pairs[i];
            let pd = match prods[i] {
                Some(p) => p,
                None => continue,
            };
            for j in 0..pairs.len() {
                let (d2, e2) = pairs[j];
                let pd2 = match prods[j] {
                    Some(p) => p,
                    None => continue,
                };
                mono.tick();
                if ctx.le(d, d2) && ctx.le(e, e2) && !ctx.le(pd, pd2) {
                    mono.fail(
                        ctx,
                        &[],
                        &[d, e, d2, e2, pd, pd2],
                        "d ≤ d' and e ≤ e' on Dom(⊗) but d ⊗ e is not ≤ d' ⊗ e'".into(),
                    );
                }
            }
        }
    } else {
        let probes = opts.probe_budget;
        let mut rng = seeded_rng(opts.seed);
        for _ in 0..probes {
            let i = rng.gen_range(0..pairs.len());
            let j = rng.gen_range(0..pairs.len());
            let (d, e) = pairs[i];
            let (d2, e2) = pairs[j];
            let (pd, pd2) = match (prods[i], prods[j]) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            mono.tick();
            if ctx.le(d, d2) && ctx.le(e, e2) && !ctx.le(pd, pd2) {
                mono.fail(
                    ctx,
                    &[],
                    &[d, e, d2, e2, pd, pd2],
                    "d ≤ d' and e ≤ e' on Dom(⊗) but d ⊗ e is not ≤ d' ⊗ e'".into(),
                );
            }
        }
        mono.note = Some(format!("sampled {probes} of {quads} domain pair squares"));
    }

    let monu = monotonic_unrestricted_probe(ctx, opts);
    vec![mono.finish(), monu]
}

/// Monotonicity over arbitrary value quadruples, beyond Dom(⊗).
/// Informational, like the unrestricted cancellation probe.
fn monotonic_unrestricted_probe(ctx: &mut Ctx, opts: &CheckOptions) -> LawResult {
    let mut law = LawRun::new("monotonic-unrestricted", false, opts);
    let base = ctx.base as u32;
    let total = (base as u64).pow(4);
    let test = |ctx: &mut Ctx, law: &mut LawRun, d: u32, d2: u32, e: u32, e2: u32| {
        if !ctx.le(d, d2) || !ctx.le(e, e2) {
            return;
        }
        let (p, p2) = match (ctx.otimes_id(d, e), ctx.otimes_id(d2, e2)) {
            (Some(x), Some(y)) => (x, y),
            _ => return,
        };
        law.tick();
        if !ctx.le(p, p2) {
            law.fail(
                ctx,
                &[],
                &[d, e, d2, e2, p, p2],
                "d ≤ d' and e ≤ e' but d ⊗ e is not ≤ d' ⊗ e' outside Dom(⊗)".into(),
            );
        }
    };
    if total <= opts.probe_budget {
        for d in 0..base {
            for d2 in 0..base {
                if !ctx.le(d, d2) {
                    continue;
                }
                for e in 0..base {
                    for e2 in 0..base {
                        test(ctx, &mut law, d, d2, e, e2);
                    }
                }
            }
        }
    } else {
        let probes = opts.probe_budget.min(INFO_SAMPLE_CAP);
        let mut rng = seeded_rng(opts.seed.wrapping_add(1));
        for _ in 0..probes {
            let d = rng.gen_range(0..base);
            let d2 = rng.gen_range(0..base);
            let e = rng.gen_range(0..base);
            let e2 = rng.gen_range(0..base);
            test(ctx, &mut law, d, d2, e, e2);
        }
        law.note = Some(format!("sampled {probes} of {total} value quadruples"));
    }
    law.finish()
}

fn implication_laws(ctx: &mut Ctx, reports: &[CheckReport]) -> Vec<LawResult> {
    let status = |law: &str| -> Option<CheckStatus> {
        reports.iter().find_map(|r| r.status_of(law))
    };
    let passed = |law: &str| status(law) == Some(CheckStatus::Pass);
    let first_witness = |law: &str| -> Option<Witness> {
        reports
            .iter()
            .find_map(|r| r.law(law))
            .and_then(|l| l.witnesses.first())
            .cloned()
    };
    let top_ne_bottom = ctx.compare_ids(ctx.top, ctx.bottom) != crate::domain::PartialComparison::Equal;

    let implication = |name: &'static str,
                       premise: bool,
                       conclusion_law: &str,
                       note: &str|
     -> LawResult {
        let conclusion = passed(conclusion_law);
        let (failed, witnesses, run_note) = if premise && !conclusion {
            let mut w = first_witness(conclusion_law).unwrap_or(Witness {
                law: name,
                events: Vec::new(),
                values: Vec::new(),
                note: String::new(),
            });
            w.law = name;
            w.note = format!("{note}: {}", w.note);
            (true, vec![w], None)
        } else if premise {
            (false, Vec::new(), None)
        } else {
            (
                false,
                Vec::new(),
                Some("premise not established on this instance".to_string()),
            )
        };
        LawResult {
            law: name,
            status: if failed {
                CheckStatus::Fail
            } else {
                CheckStatus::Pass
            },
            required: true,
            checked: 1,
            witnesses,
            note: run_note,
        }
    };

    let lemma32_premise = passed("standard")
        && passed("Alg1")
        && passed("Alg2")
        && passed("Alg3")
        && passed("Alg4")
        && passed("monotonic");
    let lemma21_premise = passed("determined")
        && passed("Acc1")
        && passed("Acc2")
        && passed("Acc3")
        && passed("Acc4")
        && top_ne_bottom;

    vec![
        implication(
            "lemma-3.2",
            lemma32_premise,
            "CPl5",
            "a standard algebraic monotonic measure must satisfy CPl5",
        ),
        implication(
            "lemma-2.1",
            lemma21_premise,
            "standard",
            "a determined acceptable measure with distinct top and bottom must be standard",
        ),
    ]
}

const NO_OPS: &str = "measure carries no operator pair";

pub fn check_cpl(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let mut ctx = Ctx::new(cpm, opts)?;
    let laws = cpl_laws(&mut ctx, opts);
    Ok(report("cpl", cpm, laws))
}

pub fn check_coherence(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let mut ctx = Ctx::new(cpm, opts)?;
    let laws = vec![coherence_law(&mut ctx, opts)];
    Ok(report("coherence", cpm, laws))
}

pub fn check_acceptable(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let mut ctx = Ctx::new(cpm, opts)?;
    let laws = acceptable_laws(&mut ctx, opts);
    Ok(report("acceptable", cpm, laws))
}

pub fn check_standard(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let mut ctx = Ctx::new(cpm, opts)?;
    let laws = vec![standard_law(&mut ctx, opts)];
    Ok(report("standard", cpm, laws))
}

pub fn check_determined(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let mut ctx = Ctx::new(cpm, opts)?;
    let laws = vec![determined_law(&mut ctx, opts)];
    Ok(report("determined", cpm, laws))
}

pub fn check_algebraic(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    if !cpm.is_algebraic() {
        return Err(Error::NotAlgebraic);
    }
    let mut ctx = Ctx::new(cpm, opts)?;
    let (laws, _) = algebraic_laws(&mut ctx, opts);
    Ok(report("algebraic", cpm, laws))
}

pub fn check_monotonic(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<CheckReport, Error> {
    if !cpm.is_algebraic() {
        return Err(Error::NotAlgebraic);
    }
    let mut ctx = Ctx::new(cpm, opts)?;
    let dom_times = sweep_alg2(&mut ctx, None);
    let laws = monotonic_laws(&mut ctx, opts, &dom_times);
    Ok(report("monotonic", cpm, laws))
}

/// Run every check on one shared evaluation context and append the
/// cross-report implication assertions.
pub fn run_suite(cpm: &dyn Cpm, opts: &CheckOptions) -> Result<SuiteReport, Error> {
    let mut ctx = Ctx::new(cpm, opts)?;
    let mut reports = Vec::with_capacity(8);
    let laws = cpl_laws(&mut ctx, opts);
    reports.push(report("cpl", cpm, laws));
    let laws = vec![coherence_law(&mut ctx, opts)];
    reports.push(report("coherence", cpm, laws));
    let laws = acceptable_laws(&mut ctx, opts);
    reports.push(report("acceptable", cpm, laws));

    let dom_times = if cpm.is_algebraic() {
        let (laws, dom_times) = algebraic_laws(&mut ctx, opts);
        reports.push(report("algebraic", cpm, laws));
        Some(dom_times)
    } else {
        let laws = ["Alg1", "Alg2", "Alg3", "Alg4", "Alg4'"]
            .into_iter()
            .map(|l| skipped(l, NO_OPS))
            .collect();
        reports.push(report("algebraic", cpm, laws));
        None
    };

    let laws = vec![standard_law(&mut ctx, opts)];
    reports.push(report("standard", cpm, laws));
    let laws = vec![determined_law(&mut ctx, opts)];
    reports.push(report("determined", cpm, laws));

    let laws = match &dom_times {
        Some(dom_times) => monotonic_laws(&mut ctx, opts, dom_times),
        None => vec![
            skipped("monotonic", NO_OPS),
            skipped("monotonic-unrestricted", NO_OPS),
        ],
    };
    reports.push(report("monotonic", cpm, laws));

    let laws = implication_laws(&mut ctx, &reports);
    reports.push(report("implications", cpm, laws));
    Ok(SuiteReport { reports })
}
