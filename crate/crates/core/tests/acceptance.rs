//! Acceptance criteria, one line each.
//!
//! Runs without the libtest harness so every criterion reports even when an
//! earlier one fails. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pil_core::bijection::{backward_map, base_of, decompose, forward_map, BaseVariant, Direction, Triple};
use pil_core::fuzz::fuzz;
use pil_core::generators::{
    aag_capparelli_series, andrews_gordon_multisum, euler_series, family_multisum, first_negative,
    product_side, rogers_ramanujan_series, schur_series, schur_series_with, sills_capparelli_series,
    EulerForm, ProductIdentity, Recurrence, SchurForm,
};
use pil_core::partitions::{count_table, shift_mismatch, ConstraintFamily, Partition};
use pil_core::verify::{compare_bivariate, compare_series, Comparison, Status};

use ConstraintFamily::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

fn describe(c: &Comparison) -> String {
    match &c.first_mismatch {
        None => format!("{} = {}", c.left, c.right),
        Some(m) => match m.m {
            Some(k) => format!("{} != {} at n={} m={k} ({} vs {})", c.left, c.right, m.n, m.left, m.right),
            None => format!("{} != {} at n={} ({} vs {})", c.left, c.right, m.n, m.left, m.right),
        },
    }
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s", t.as_secs_f64()))
}

fn first_example() -> Outcome {
    let start = Instant::now();
    let t = Triple::new(vec![1, 2], vec![3, 9]);
    let (p, trace) = forward_map(Cp1, &t, BaseVariant::Plain).unwrap();
    let shown = decompose(Cp1, &p, Direction::Forward).unwrap().to_string();
    let snapshot = trace.contains_snapshot("[2,4],9,[14,16],20");
    let (fast, took) = within(Duration::from_secs(1), start);
    let pass = shown == "3,[6,9],14,[18,21]" && p.weight() == 71 && snapshot && trace.check().is_ok() && fast;
    Outcome::new(pass, format!("cp1 (1+2, 3+9) -> {shown}, weight {}, intermediate snapshot {snapshot}, {took}", p.weight()))
}

fn second_example() -> Outcome {
    let p = Partition::new(vec![3, 6, 9, 14, 18, 21]).unwrap();
    let (t, v, _) = backward_map(Cp2, &p).unwrap();
    let beta = base_of(Cp2, &t, v).unwrap();
    let pass = beta.weight() == 64 && t.mu.parts() == [0, 1] && t.eta.parts() == [0, 6];
    Outcome::new(pass, format!("cp2 [3,6],9,14,[18,21] -> beta {beta} (weight {}), mu {}, eta {}", beta.weight(), t.mu, t.eta))
}

fn refined_cp1() -> Outcome {
    let start = Instant::now();
    let c = compare_bivariate(
        ("cp1 oracle", &count_table(Cp1, 40).to_bivariate()),
        ("cp1 double sum", &family_multisum(Cp1, 40).unwrap()),
    );
    let (fast, took) = within(Duration::from_secs(60), start);
    Outcome::new(c.status == Status::Pass && fast, format!("{} for n, m <= 40, {took}", describe(&c)))
}

fn corollary_products() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (id, f) in [
        (ProductIdentity::Capparelli1, Cp1),
        (ProductIdentity::Capparelli2, Cp2),
        (ProductIdentity::Gg1, Gg22),
        (ProductIdentity::Gg2, Gg21),
    ] {
        let start = Instant::now();
        let sum = family_multisum(f, 60).unwrap().at_x_one();
        let prod = product_side(id, 60).unwrap();
        let c = compare_series((&format!("{f} sum"), &sum), (&id.to_string(), &prod));
        let (fast, took) = within(Duration::from_secs(60), start);
        pass &= c.status == Status::Pass && fast;
        parts.push(format!("{} ({took})", describe(&c)));
    }
    Outcome::new(pass, format!("{} up to q^60", parts.join("; ")))
}

fn other_families() -> Outcome {
    let mut pass = true;
    let mut bad = Vec::new();
    for f in [Cp2, Cp0, Cp1m1, Cp1m2, Gg22, Gg21, Ggo21, Gge22] {
        let c = compare_bivariate(
            ("oracle", &count_table(f, 40).to_bivariate()),
            ("double sum", &family_multisum(f, 40).unwrap()),
        );
        if c.status == Status::Fail {
            pass = false;
            bad.push(format!("{f}: {}", describe(&c)));
        }
    }
    let detail = if pass {
        "cp2 cp0 cp1m1 cp1m2 gg22 gg21 ggo21 gge22 double sums equal their count tables for n, m <= 40".to_string()
    } else {
        bad.join("; ")
    };
    Outcome::new(pass, detail)
}

fn bijectivity() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for f in ConstraintFamily::BIJECTIVE {
        let r = fuzz(f, 40, 0, 0).unwrap();
        pass &= r.passed();
        parts.push(format!("{f} {}/{} ({} failures)", r.partitions, r.triples, r.failures.len()));
    }
    Outcome::new(pass, format!("partitions/triples up to weight 40: {}", parts.join(", ")))
}

fn andrews_gordon() -> Outcome {
    let mut pass = true;
    let mut bad = Vec::new();
    for k in 2..=4 {
        for a in 1..=k {
            let ms = andrews_gordon_multisum(k, a, 50).unwrap().at_x_one();
            let prod = product_side(ProductIdentity::Gordon { k, a }, 50).unwrap();
            let oracle = count_table(Gordon { k, a }, 50).totals_series();
            for c in [compare_series(("sum", &ms), ("product", &prod)), compare_series(("sum", &ms), ("B", &oracle))] {
                if c.status == Status::Fail {
                    pass = false;
                    bad.push(format!("({k},{a}) {}", describe(&c)));
                }
            }
        }
    }
    let detail = if pass {
        "multisum = product = B_{k,a} for k in 2..=4, 1 <= a <= k, n <= 50".to_string()
    } else {
        bad.join("; ")
    };
    Outcome::new(pass, detail)
}

fn cross_checks() -> Outcome {
    let oracle = count_table(Cp1, 50).totals_series();
    let aag = compare_series(("AAG", &aag_capparelli_series(50)), ("cp1 oracle", &oracle));
    let sills = compare_series(("Sills", &sills_capparelli_series(50)), ("cp1 oracle", &oracle));
    let pass = aag.status == Status::Pass && sills.status == Status::Pass;
    Outcome::new(pass, format!("{}; {} up to q^50", describe(&aag), describe(&sills)))
}

fn shifted(f: ConstraintFamily, s: u32) -> String {
    if s == 1 {
        format!("{f}(n+m,m)")
    } else {
        format!("{f}(n+{s}m,m)")
    }
}

fn shift_relations() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (l, r, s) in [(Cp1m1, Cp1, 1), (Gg22, Gg21, 2), (Gge22, Ggo21, 1)] {
        let lhs = shifted(l, s);
        match shift_mismatch(l, r, s, 40).unwrap() {
            None => parts.push(format!("{lhs} = {r}(n,m)")),
            Some(b) => {
                pass = false;
                parts.push(format!(
                    "{lhs} != {r}(n,m) at n={} m={} ({} vs {})",
                    b.n, b.m, b.left, b.right
                ));
            }
        }
    }
    let mut out = Outcome::new(pass, format!("{} for n <= 40", parts.join("; ")));
    let mut reversed = Vec::new();
    for (l, r, s) in [(Cp1, Cp1m1, 1), (Gg21, Gg22, 2), (Ggo21, Gge22, 1)] {
        let ok = shift_mismatch(l, r, s, 40).unwrap().is_none();
        reversed.push(format!("{} = {r}(n,m): {ok}", shifted(l, s)));
    }
    out = out.note(format!("with the sides exchanged: {}", reversed.join(", ")));
    out
}

fn schur() -> Outcome {
    let oracle = count_table(Schur, 40).to_bivariate();
    let a = compare_bivariate(("s(n,m)", &oracle), ("a-series", &schur_series(SchurForm::A, 40).unwrap()));
    let alpha = compare_bivariate(("s(n,m)", &oracle), ("alpha-series", &schur_series(SchurForm::Alpha, 40).unwrap()));
    let a_neg = first_negative(SchurForm::A, Recurrence::AsPrinted, 20, 40).unwrap();
    let pass = a.status == Status::Pass && alpha.status == Status::Pass && a_neg.is_none();
    let alpha_neg = first_negative(SchurForm::Alpha, Recurrence::AsPrinted, 20, 40).unwrap();
    let dilated: Vec<bool> = [SchurForm::A, SchurForm::Alpha]
        .into_iter()
        .map(|f| compare_bivariate(("", &oracle), ("", &schur_series_with(f, Recurrence::Dilated, 40).unwrap())).status == Status::Pass)
        .collect();
    Outcome::new(
        pass,
        format!(
            "{}; {}; a_n non-negative for n <= 20: {}",
            describe(&a),
            describe(&alpha),
            a_neg.is_none()
        ),
    )
    .note(match alpha_neg {
        None => "alpha_n non-negative for n <= 20 (observed)".to_string(),
        Some((n, e)) => format!("alpha_{n} has a negative coefficient at q^{e} (observed)"),
    })
    .note(format!(
        "with q -> q^2 in both recurrences the a- and alpha-series match s(n,m): {}, {}",
        dilated[0], dilated[1]
    ))
}

fn euler_rr() -> Outcome {
    let e1 = euler_series(EulerForm::DistinctSum, 50);
    let e2 = euler_series(EulerForm::InclusionExclusion, 50);
    let e3 = euler_series(EulerForm::OddProduct, 50);
    let rr = rogers_ramanujan_series(50).at_x_one();
    let pass = e1 == e2 && e2 == e3 && rr[4] == BigInt::from(2);
    Outcome::new(pass, format!("three Euler forms agree up to q^50: {}; RR coefficient of q^4 = {}", e1 == e2 && e2 == e3, rr[4]))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("first worked example", first_example),
        ("second worked example", second_example),
        ("refined cp1 double sum", refined_cp1),
        ("product sides", corollary_products),
        ("family double sums", other_families),
        ("bijectivity", bijectivity),
        ("Andrews-Gordon", andrews_gordon),
        ("AAG and Sills cross-checks", cross_checks),
        ("shift relations", shift_relations),
        ("Schur series", schur),
        ("Euler and Rogers-Ramanujan", euler_rr),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}  {name}: {} [{:.2}s]",
            i + 1,
            out.detail,
            start.elapsed().as_secs_f64()
        );
        for n in out.notes {
            println!("               note: {n}");
        }
        if !out.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
