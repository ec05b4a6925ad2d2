//! One line per acceptance criterion, with wall-clock time against its budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bordered_core::bimodule::{
    box_tensor, cancel_dd, cancellable_pairs_dd, check_da, graphs_isomorphic, underlying_type_d, verify_homotopy_data,
    Bimodule,
};
use bordered_core::paper_data::{build, koszul_full, run_check, xda_local, xdd_local, Pattern};
use bordered_core::Report;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed).map(|r| r.to_string()).collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() { format!("{checked} checks") } else { failed.join("") },
    }
}

fn check(name: &str, nmax: u8) -> Report {
    run_check(name, nmax).expect("known check")
}

fn basis() -> Outcome {
    let bad = common::basis_mismatches();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() { "every idempotent pair of B(2,k), k ≤ 3".into() } else { bad.join("; ") },
    }
}

fn da_validity() -> Outcome {
    let mut rep = check("xda", 2);
    let k = koszul_full(2);
    let mut deletions = 0;
    for p in [Pattern::Standard, Pattern::Alternate] {
        let g = xda_local(p);
        for i in 0..g.edges.len() {
            let mut h = g.clone();
            h.edges.remove(i);
            deletions += 1;
            let caught = !check_da(&h).passed || {
                // A term alone in its summand leaves a valid bimodule; the pairing with K exposes it.
                let t = box_tensor(&h, &k).expect("compatible");
                !graphs_isomorphic(&Bimodule::DD(t), &Bimodule::DD(xdd_local()), &|s| s.to_string()).passed
            };
            rep.check(caught, format!("{p:?}: deleting edge {i}"), || "undetected".into());
        }
    }
    let mut out = from_reports(vec![rep]);
    out.detail.push_str(&format!(", {deletions} single-term deletions detected"));
    out
}

fn simplification() -> Outcome {
    let mut rep = check("xda-tilde", 2);
    for p in [Pattern::Standard, Pattern::Alternate] {
        let d = underlying_type_d(&xda_local(p));
        for (x, y) in cancellable_pairs_dd(&d) {
            let c = cancel_dd(&d, x, y).expect("cancellable");
            rep.absorb(verify_homotopy_data(&d, &c.graph, &c.f, &c.g, &c.h));
        }
    }
    from_reports(vec![rep])
}

fn dd_validity() -> Outcome {
    from_reports(vec![check("xdd", 4), check("xdd-tilde", 4), check("koszul", 4)])
}

fn global() -> Outcome {
    from_reports(vec![check("global", 5)])
}

fn gradings() -> Outcome {
    let mut rep = check("gradings", 2);
    let rows = bordered_core::paper_data::grade_table(&build("XDD").expect("known"));
    let row = |name: &str| rows.iter().find(|r| r.name == name).expect("vertex");
    rep.check(row("S-t_∅").maslov == 1, "m(S-t) = 1", || row("S-t_∅").maslov.to_string());
    rep.check(row("Et_B").single == "0", "Alex(Et) = 0", || row("Et_B").single.clone());
    let wb = bordered_core::paper_data::Tag::Wb.deg1();
    rep.check(wb.alexander_string() == "β1+τ2+β2", "deg1(Wb) = τ2+β1+β2", || wb.alexander_string());
    for id in ["XDDglobal:3,1", "XDDglobal:3,2", "K:3,1"] {
        if let Bimodule::DD(g) = build(id).expect("known") {
            rep.absorb(bordered_core::bimodule::validate_compat_dd(&g));
        }
    }
    from_reports(vec![rep])
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "n = 2 basis oracle", Some(5), basis),
        (2, "algebra laws for n ≤ 4", Some(60), || from_reports(vec![check("algebra-laws", 4)])),
        (3, "X^DA relations, both patterns, with mutation sensitivity", Some(10), da_validity),
        (4, "X̃^DA: 2/8/6 generators, relations, type D homotopy data", Some(10), simplification),
        (5, "box tensor with K recovers X^DD and X̃^DD", Some(5), || from_reports(vec![check("box-tensor", 2)])),
        (6, "DD relations on X^DD, X̃^DD, K(n,k) for n ≤ 4", Some(30), dd_validity),
        (7, "global X_i^DD for 2 ≤ n ≤ 5 with local/external/cross parts", Some(120), global),
        (8, "grading compatibility and degree tables", None, gradings),
        (9, "R, o, Ro squares and grading transforms", Some(10), || from_reports(vec![check("symmetries", 2)])),
        (10, "homotopy data for every cancellable pair", None, || from_reports(vec![check("cancellation", 2)])),
    ];
    let mut all = true;
    for (k, what, budget, run) in criteria {
        let t = Instant::now();
        let out = run();
        let elapsed = t.elapsed();
        let in_time = budget.is_none_or(|s| elapsed <= Duration::from_secs(s));
        let ok = out.ok && in_time;
        all &= ok;
        let limit = budget.map(|s| format!(" / {s} s")).unwrap_or_default();
        println!(
            "[{}] criterion {k:>2}: {what} ({:.2} s{limit}; {})",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            out.detail.trim_end()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
