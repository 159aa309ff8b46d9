//! Exhaustive and seeded checks of the bijections.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bijection::{backward_map, base_partition, forward_map, BaseVariant, MoveTrace, Triple};
use crate::error::{Error, Result};
use crate::partitions::{count_table, enumerate, satisfies, ConstraintFamily, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Roundtrip,
    ReverseRoundtrip,
    Trace,
    Predicate,
    Count,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub kind: FailureKind,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub family: ConstraintFamily,
    pub max_n: usize,
    pub seed: u64,
    pub partitions: usize,
    pub triples: usize,
    pub moves: usize,
    pub samples: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Weakly increasing lists of `len` multiples of `step` with sum at most
/// `budget`, zeros allowed.
pub fn padded_lists(len: usize, step: u32, budget: u64) -> Vec<Vec<u32>> {
    fn go(len: usize, step: u32, lo: u32, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let left = (len - cur.len()) as u64;
        let mut v = lo;
        while u64::from(v) * left <= budget {
            cur.push(v);
            go(len, step, v, budget - u64::from(v), cur, out);
            cur.pop();
            v += step;
        }
    }
    let mut out = Vec::new();
    go(len, step, 0, budget, &mut Vec::new(), &mut out);
    out
}

fn variants(family: ConstraintFamily) -> Vec<BaseVariant> {
    if family.anchor_part().is_some() {
        vec![BaseVariant::Plain, BaseVariant::Anchored]
    } else {
        vec![BaseVariant::Plain]
    }
}

/// Every `(variant, triple)` whose image has weight at most `max_n`.
pub fn triples_up_to(family: ConstraintFamily, max_n: usize) -> Result<Vec<(BaseVariant, Triple)>> {
    let step = family.pair_rule().ok_or(Error::NoBijection(family))?.step();
    let cap = max_n as u64;
    let mut out = Vec::new();
    for v in variants(family) {
        for n2 in 0.. {
            if base_partition(family, 0, n2, v)?.weight() > cap {
                break;
            }
            for n1 in 0.. {
                let base = base_partition(family, n1, n2, v)?.weight();
                if base > cap {
                    break;
                }
                for mu in padded_lists(n1, 1, cap - base) {
                    let rest = cap - base - mu.iter().map(|&x| u64::from(x)).sum::<u64>();
                    for eta in padded_lists(n2, step, rest) {
                        out.push((v, Triple::new(mu.clone(), eta)));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn check_trace(trace: &MoveTrace, input: &str, failures: &mut Vec<FuzzFailure>) {
    if let Err(e) = trace.check() {
        failures.push(FuzzFailure {
            kind: FailureKind::Trace,
            input: input.to_string(),
            detail: e.to_string(),
        });
    }
}

fn roundtrip_triple(
    family: ConstraintFamily,
    v: BaseVariant,
    t: &Triple,
    failures: &mut Vec<FuzzFailure>,
) -> Option<(Partition, usize)> {
    let input = format!("{v:?} mu={} eta={}", t.mu, t.eta);
    let fail = |kind, detail: String| FuzzFailure {
        kind,
        input: input.clone(),
        detail,
    };
    let (p, trace) = match forward_map(family, t, v) {
        Ok(r) => r,
        Err(e) => {
            failures.push(fail(FailureKind::Error, e.to_string()));
            return None;
        }
    };
    check_trace(&trace, &input, failures);
    if !satisfies(family, &p) {
        failures.push(fail(FailureKind::Predicate, format!("image {p} violates {family}")));
    }
    match backward_map(family, &p) {
        Ok((back, bv, _)) if back == *t && bv == v => {}
        Ok((back, bv, _)) => failures.push(fail(
            FailureKind::ReverseRoundtrip,
            format!("{p} maps back to {bv:?} mu={} eta={}", back.mu, back.eta),
        )),
        Err(e) => failures.push(fail(FailureKind::Error, e.to_string())),
    }
    Some((p, trace.move_count()))
}

/// Checks both roundtrips for every partition and triple of weight up to
/// `max_n`, checks every move trace, and compares the triple counts with
/// the enumeration. Then draws `samples` random triples up to twice that
/// weight from a generator seeded with `seed`.
pub fn fuzz(family: ConstraintFamily, max_n: usize, seed: u64, samples: usize) -> Result<FuzzReport> {
    family.pair_rule().ok_or(Error::NoBijection(family))?;
    let mut failures = Vec::new();
    let mut partitions = 0;
    let mut moves = 0;

    for n in 0..=max_n as u64 {
        for p in enumerate(family, n) {
            partitions += 1;
            let input = p.to_string();
            match backward_map(family, &p) {
                Ok((t, v, trace)) => {
                    check_trace(&trace, &input, &mut failures);
                    moves += trace.move_count();
                    match forward_map(family, &t, v) {
                        Ok((q, _)) if q == p => {}
                        Ok((q, _)) => failures.push(FuzzFailure {
                            kind: FailureKind::Roundtrip,
                            input,
                            detail: format!("came back as {q}"),
                        }),
                        Err(e) => failures.push(FuzzFailure {
                            kind: FailureKind::Error,
                            input,
                            detail: e.to_string(),
                        }),
                    }
                }
                Err(e) => failures.push(FuzzFailure {
                    kind: FailureKind::Error,
                    input,
                    detail: e.to_string(),
                }),
            }
        }
    }

    let triples = triples_up_to(family, max_n)?;
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (v, t) in &triples {
        if let Some((p, k)) = roundtrip_triple(family, *v, t, &mut failures) {
            moves += k;
            *counts.entry((p.weight() as usize, p.len())).or_default() += 1;
        }
    }
    let table = count_table(family, max_n);
    for n in 0..=max_n {
        for m in 0..=n {
            let got = counts.get(&(n, m)).copied().unwrap_or(0);
            if got != table.get(n, m) {
                failures.push(FuzzFailure {
                    kind: FailureKind::Count,
                    input: format!("n={n} m={m}"),
                    detail: format!("{got} triples, {} partitions", table.get(n, m)),
                });
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = family.pair_rule().map_or(1, |r| r.step());
    let vs = variants(family);
    let budget = 2 * max_n as u32 + 1;
    for _ in 0..samples {
        let v = vs[rng.gen_range(0..vs.len())];
        let n1 = rng.gen_range(0..4);
        let n2 = rng.gen_range(0..4);
        let mu = (0..n1).map(|_| rng.gen_range(0..budget / 4 + 1)).collect();
        let eta = (0..n2).map(|_| step * rng.gen_range(0..budget / (4 * step) + 1)).collect();
        let t = Triple::new(mu, eta);
        if let Some((_, k)) = roundtrip_triple(family, v, &t, &mut failures) {
            moves += k;
        }
    }

    Ok(FuzzReport {
        family,
        max_n,
        seed,
        partitions,
        triples: triples.len(),
        moves,
        samples,
        failures,
    })
}
