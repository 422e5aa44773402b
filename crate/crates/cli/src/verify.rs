use crate::config::Problem;
use crate::export::header;
use anyhow::{bail, Result};
use ncp_core::arrangement::{antipodal_violations, prop41_violations};
use ncp_core::complexes::{
    check_poset_map, fiber_check, homology_rank, lemma48_violations, ncp_basis_cycles, reduced_betti,
};
use ncp_core::embed::check_mu;
use ncp_core::ExactPipeline;
use serde::Serialize;
use serde_json::{json, Value};

pub const SUITES: &[&str] = &[
    "length-oracle",
    "rootorder",
    "lemma48",
    "poset-map",
    "fibers",
    "betti",
    "mobius",
    "cycles",
    "prop41",
    "prop42",
    "mu-dots",
    "lattice",
    "embed",
];

#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub details: Value,
    pub failures: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub header: Value,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

pub fn run(problem: &Problem, p: &ExactPipeline, names: &[String]) -> Result<Report> {
    for name in names {
        if !SUITES.contains(&name.as_str()) {
            bail!("unknown suite {name:?}; known suites: {}", SUITES.join(", "));
        }
    }
    let suites = names
        .iter()
        .map(|name| suite(problem, p, name))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report {
        header: serde_json::to_value(header(problem, &p.system))?,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn suite(problem: &Problem, p: &ExactPipeline, name: &str) -> Result<SuiteResult> {
    let sys = &p.system;
    let n = sys.rank();
    let mut failures = Vec::new();
    let details = match name {
        "length-oracle" => {
            let bfs = sys.reflection_length_bfs();
            let g = sys.group();
            for w in g.ids() {
                if g.length(w) != bfs[w.0] {
                    failures.push(format!("element {}: {} vs {}", w.0, g.length(w), bfs[w.0]));
                }
            }
            json!({"elements": g.len()})
        }
        "rootorder" => {
            let half = n * sys.coxeter_number() / 2;
            if p.ordered.len() != half {
                failures.push(format!("{} roots, expected {half}", p.ordered.len()));
            }
            if sys.reflections().len() != half {
                failures.push(format!("|T| = {}", sys.reflections().len()));
            }
            json!({"roots": p.ordered.len(), "tau": p.ordered.tau_positions()})
        }
        "lemma48" => {
            for f in lemma48_violations(sys, &p.ordered, &p.xc) {
                failures.push(format!("simplex {f:?}"));
            }
            json!({"faces": p.xc.complex().face_count()})
        }
        "poset-map" => {
            let r = check_poset_map(sys, &p.ordered, &p.xc);
            failures.extend(r.bad_faces.iter().map(|f| format!("face {f:?}")));
            failures.extend(r.bad_pairs.iter().map(|(a, b)| format!("{a:?} < {b:?}")));
            json!({"faces": r.faces_checked, "pairs": r.pairs_checked})
        }
        "fibers" => {
            let r = fiber_check(sys, &p.ordered, &p.xc, &p.ncp)?;
            failures.extend(r.failures.iter().map(|w| format!("element {}", w.0)));
            json!({"checked": r.checked})
        }
        "betti" => {
            let oc = p.ncp.proper_order_complex(problem.simplex_budget)?;
            let betti = reduced_betti(&oc).nonzero();
            let expected = vec![(n as isize - 2, p.facet_count())];
            if betti != expected {
                failures.push(format!("betti {betti:?}, expected {expected:?}"));
            }
            json!({"reducedBetti": betti, "facets": p.facet_count()})
        }
        "mobius" => {
            let mu = p.ncp.mobius_number();
            let expected = if n % 2 == 0 { 1 } else { -1 } * p.facet_count() as i64;
            if mu != expected {
                failures.push(format!("mobius {mu}, expected {expected}"));
            }
            json!({"mobius": mu, "elements": p.ncp.len()})
        }
        "cycles" => {
            let cycles = ncp_basis_cycles(sys, &p.ordered, &p.xc, &p.ncp)?;
            if !cycles.iter().all(|z| z.boundary().is_zero()) {
                failures.push("a basis chain has nonzero boundary".into());
            }
            let oc = p.ncp.proper_order_complex(problem.simplex_budget)?;
            let rank = homology_rank(&oc, n as isize - 2, &cycles);
            if rank != Some(p.facet_count()) {
                failures.push(format!("cycle rank {rank:?}, expected {}", p.facet_count()));
            }
            json!({"cycles": cycles.len(), "rank": rank})
        }
        "prop41" => {
            for i in prop41_violations(sys, &p.rays, &p.generic) {
                failures.push(format!("ray {i}"));
            }
            json!({"rays": p.rays.len(), "lambda": p.generic.lambda.to_string()})
        }
        "prop42" => {
            let r = check_mu(sys, &p.ordered, &p.mu, &p.generic.v);
            failures.extend(r.not_positive.iter().map(|i| format!("mu(rho_{}).v <= 0", i + 1)));
            json!({"vertices": p.mu.vertices.len()})
        }
        "mu-dots" => {
            let r = check_mu(sys, &p.ordered, &p.mu, &p.generic.v);
            failures.extend(
                r.negative_upper
                    .iter()
                    .map(|(i, j)| format!("mu(rho_{}).rho_{} < 0", i + 1, j + 1)),
            );
            failures.extend(
                r.nonzero_shift
                    .iter()
                    .map(|(i, t)| format!("mu(rho_{}).rho_{} != 0", i + t + 1, i + 1)),
            );
            json!({"checks": r.checks})
        }
        "lattice" => {
            let lattice = p.intersection_lattice();
            let oc = lattice.proper_order_complex(problem.simplex_budget)?;
            let betti = reduced_betti(&oc).nonzero();
            let expected = vec![(n as isize - 2, p.bounded_count())];
            if betti != expected {
                failures.push(format!("betti {betti:?}, expected {expected:?}"));
            }
            for i in antipodal_violations(&p.chambers, &p.bounded) {
                failures.push(format!("chamber {i} and its antipode are both bounded-slice"));
            }
            json!({"flats": lattice.len(), "reducedBetti": betti, "boundedRegions": p.bounded_count()})
        }
        "embed" => {
            let r = p.embedding()?;
            if !r.disjoint {
                failures.push("facet columns overlap".into());
            }
            if !r.nonempty {
                failures.push("a facet contains no chamber".into());
            }
            if !r.injective {
                failures.push(format!("rank {} < {} facets", r.rank, r.facets.len()));
            }
            if !r.incident_bounded {
                failures.push("a facet contains an unbounded-slice chamber".into());
            }
            json!({
                "boundedRegions": r.bounded.len(),
                "facets": r.facets.len(),
                "rank": r.rank,
                "columnWeights": r.column_weights(),
                "covered": r.covered,
            })
        }
        _ => unreachable!("suite names are validated"),
    };
    Ok(SuiteResult {
        name: name.to_string(),
        passed: failures.is_empty(),
        details,
        failures,
    })
}
