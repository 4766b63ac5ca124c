//! The acceptance checklist. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails. Runs without the libtest harness so
//! the lines are always shown.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rindep::chordality::{is_w_chordal, ChordalDecision};
use rindep::complex::{independence_complex, ind_r_complex};
use rindep::conn::con_r;
use rindep::constructions::{counterexample_gt, she_higher_family, whiskered};
use rindep::harness::{run_suite, RunReport, SuiteConfig};
use rindep::shelling::{is_shellable, prefix_search, ShellDecision};
use rindep::vset::canonicalize;
use rindep::{Graph, VertexSet};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn config() -> SuiteConfig {
    SuiteConfig {
        budget: 10_000_000,
        ..SuiteConfig::default()
    }
}

fn suite(id: &str) -> RunReport {
    run_suite(id, &config()).unwrap_or_else(|e| panic!("suite {id}: {e}"))
}

fn clean(r: &RunReport) -> bool {
    r.all_passed() && r.fail == 0 && r.unknown == 0 && r.instances > 0
}

fn suites_pass(reports: &[&RunReport], min: &[(usize, usize)]) -> Outcome {
    let ok = reports.iter().all(|r| clean(r))
        && reports
            .iter()
            .zip(min)
            .all(|(r, &(instances, graphs))| r.instances >= instances && r.distinct_graphs >= graphs);
    let detail = reports
        .iter()
        .map(|r| format!("{}: {}/{} pass, {} graphs", r.suite, r.pass, r.instances, r.distinct_graphs))
        .collect::<Vec<_>>()
        .join("; ");
    outcome(ok, detail)
}

fn gt_minor() -> Outcome {
    let k1 = Graph::empty(1);
    let lg = counterexample_gt(4, [&k1, &k1, &k1]).unwrap();
    let h = con_r(&lg.graph, 4);
    let ChordalDecision::Fails(cert) = is_w_chordal(&h, 10_000_000) else {
        return outcome(false, "no bad minor found");
    };
    let name = |s: VertexSet| s.iter().map(|v| lg.labels[v].clone()).collect::<BTreeSet<_>>();
    let vertices = name(cert.minor_vertices);
    let edges: BTreeSet<BTreeSet<String>> = cert.minor_edges.iter().map(|&e| name(e)).collect();
    let want_vertices: BTreeSet<String> = (1..=7).map(|i| format!("v{i}")).collect();
    let want_edges: BTreeSet<BTreeSet<String>> = [
        ["v1", "v2", "v3", "v4"],
        ["v1", "v2", "v3", "v6"],
        ["v1", "v4", "v5", "v6"],
        ["v1", "v2", "v4", "v5"],
        ["v1", "v4", "v6", "v7"],
        ["v1", "v2", "v6", "v7"],
    ]
    .iter()
    .map(|e| e.iter().map(|s| s.to_string()).collect())
    .collect();
    let ok = vertices == want_vertices && edges == want_edges && cert.verify(&h);
    outcome(ok, format!("minor on {vertices:?} with {} edges", edges.len()))
}

fn she_higher_link(report: &RunReport) -> Outcome {
    let f = she_higher_family(2, 1).unwrap();
    let [a1, c, b1, d] = f.cycle;
    let link = ind_r_complex(&f.g.graph, f.r).link(f.contracted).unwrap();
    let mut want = vec![VertexSet::from([a1, b1]), VertexSet::from([c, d])];
    canonicalize(&mut want);
    let mut got = link.facets().to_vec();
    canonicalize(&mut got);
    let c4 = is_shellable(&independence_complex(&con_r(&Graph::cycle(4), 1)), 10_000_000);
    let ok = f.r == 4 && got == want && c4.is_not_shellable() && clean(report);
    outcome(ok, format!("link facets {got:?}, ind(C4) {}", c4.label()))
}

fn last_example(report: &RunReport) -> Outcome {
    let c4 = Graph::cycle(4);
    let w = whiskered(&c4).unwrap().graph;
    let d = ind_r_complex(&w, 2);
    let decision = prefix_search(&d, 10_000_000);
    let whiskers = w.vertices().difference(c4.vertices());
    let link = d.link(whiskers).unwrap();
    let ok = matches!(decision, ShellDecision::NotShellable { .. })
        && link.facets() == independence_complex(&con_r(&c4, 1)).facets()
        && clean(report);
    outcome(ok, format!("{} facets, search says {}", d.facet_count(), decision.label()))
}

fn main() {
    let mut lines = Vec::new();
    let mut timed = |n: usize, limit: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let mut o = f();
        let took = start.elapsed();
        if took > limit {
            o.ok = false;
            o.detail += &format!(" (over the {} s limit)", limit.as_secs());
        }
        lines.push((n, o, took));
    };

    let reports = RefCell::new(HashMap::new());
    let run = |id: &'static str| -> RunReport {
        let r = suite(id);
        reports.borrow_mut().insert(id, r.clone());
        r
    };

    timed(1, Duration::from_secs(60), &mut || {
        let r = run("con-ind");
        suites_pass(&[&r], &[(1324, 0)])
    });
    timed(2, Duration::from_secs(120), &mut || {
        let direct = gt_minor();
        let r = run("not-chordal");
        outcome(direct.ok && clean(&r), direct.detail)
    });
    timed(3, Duration::from_secs(600), &mut || {
        let r = run("chordal-cond");
        suites_pass(&[&r], &[(410, 205)])
    });
    timed(4, Duration::from_secs(600), &mut || {
        let r = run("block-2");
        suites_pass(&[&r], &[(500, 500)])
    });
    timed(5, Duration::from_secs(900), &mut || {
        let t = run("tree-diam");
        let b = run("block-diam");
        suites_pass(&[&t, &b], &[(225, 75), (400, 200)])
    });
    timed(6, Duration::from_secs(600), &mut || {
        let r = run("tree-lower");
        suites_pass(&[&r], &[(1, 308)])
    });
    timed(7, Duration::from_secs(900), &mut || {
        let b = run("block-3");
        let f = run("3-tree");
        suites_pass(&[&b, &f], &[(300, 300), (155, 155)])
    });
    timed(8, Duration::from_secs(1200), &mut || {
        let b4 = run("block-4");
        let b5 = run("block-5");
        suites_pass(&[&b4, &b5], &[(150, 150), (300, 150)])
    });
    timed(9, Duration::from_secs(1800), &mut || {
        let all = ["whisker", "she", "clique-whisker", "clique-cycle"].map(run);
        suites_pass(&all.each_ref(), &[(100, 0); 4])
    });
    timed(10, Duration::from_secs(60), &mut || she_higher_link(&run("she-higher")));
    timed(11, Duration::from_secs(120), &mut || last_example(&run("last-ex")));

    let chain_ids = [
        "chordal-cond", "block-2", "block-diam", "tree-diam", "tree-lower", "block-3", "3-tree",
        "block-4", "block-5", "whisker", "she", "clique-whisker", "clique-cycle",
    ];
    timed(12, Duration::MAX, &mut || {
        let (mut w, mut c, mut bad) = (0, 0, 0);
        for id in chain_ids {
            let s = &reports.borrow()[id].chain;
            w += s.w_chordal_checked;
            c += s.contraction_checked;
            bad += s.violations;
        }
        outcome(
            bad == 0 && w > 0 && c > 0,
            format!("{w} w-chordal and {c} contraction checks, {bad} violations"),
        )
    });
    timed(13, Duration::from_secs(600), &mut || {
        let engine = run("engine");
        let mut compared = engine.engine.compared;
        let mut bad = engine.engine.disagreements;
        for id in chain_ids.iter().chain(&["not-chordal", "she-higher", "last-ex"]) {
            let e = &reports.borrow()[id].engine;
            compared += e.compared;
            bad += e.disagreements;
        }
        outcome(
            clean(&engine) && engine.engine.compared >= 500 && bad == 0,
            format!("{compared} complexes compared, {bad} disagreements"),
        )
    });

    let mut failed = Vec::new();
    for (n, o, took) in &lines {
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {status}  {} [{:.1} s]", o.detail, took.as_secs_f64());
        if !o.ok {
            failed.push(*n);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", lines.len());
}
