//! The ten acceptance criteria. Run with `--nocapture` to see one line per criterion.

use ncp_core::algebra::{FieldElement, Scalar};
use ncp_core::arrangement::prop41_violations;
use ncp_core::complexes::{
    check_poset_map, fiber_check, homology_rank, ncp_basis_cycles, reduced_betti,
    DEFAULT_SIMPLEX_BUDGET,
};
use ncp_core::coxeter::CoxeterDiagram;
use ncp_core::embed::check_mu;
use ncp_core::pipeline::PipelineOptions;
use ncp_core::ExactPipeline;
use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

const GROUPS: &[(&str, usize)] = &[
    ("A", 2),
    ("A", 3),
    ("B", 2),
    ("B", 3),
    ("H", 3),
    ("I3", 2),
    ("I4", 2),
    ("I5", 2),
    ("I6", 2),
    ("I7", 2),
    ("I8", 2),
];

fn pipeline(kind: &str, rank: usize) -> ExactPipeline {
    let d = CoxeterDiagram::from_type(kind, rank).unwrap();
    ExactPipeline::build(&d, &PipelineOptions::default()).unwrap()
}

struct Outcome {
    id: usize,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
    elapsed: Duration,
}

fn run(id: usize, title: &'static str, limit: Option<Duration>, f: impl FnOnce(&mut Vec<String>) -> String) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let detail = f(&mut failures);
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            failures.push(format!("took {elapsed:?}, limit {limit:?}"));
        }
    }
    Outcome {
        id,
        title,
        failures,
        detail,
        elapsed,
    }
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn label(kind: &str, rank: usize) -> String {
    CoxeterDiagram::from_type(kind, rank).unwrap().label().to_string()
}

// Intersection-lattice homology by a separate route: flats from all subsets of
// hyperplanes, chains enumerated directly, boundary ranks mod a prime.

const P: i64 = 1_000_000_007;

fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], P - 2);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let k = rows[r][c] * inv % P;
                for j in c..cols {
                    rows[r][j] = (rows[r][j] - k * rows[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn oracle_lattice_betti(p: &ExactPipeline) -> Vec<usize> {
    let sys = &p.system;
    let n = sys.rank();
    let roots = sys.positive_roots();
    let covectors: Vec<Vec<FieldElement>> = roots.iter().map(|r| sys.covector(r).0).collect();
    let mut flats: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 1u64..(1 << roots.len()) {
        let rows: Vec<Vec<FieldElement>> = (0..roots.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| covectors[i].clone())
            .collect();
        let kernel = ncp_core::algebra::Matrix::from_rows(rows).unwrap().kernel();
        let dim = kernel.len();
        if dim == 0 || dim == n {
            continue;
        }
        let vanishing: Vec<usize> = (0..roots.len())
            .filter(|&j| kernel.iter().all(|k| sys.dot(&roots[j], k).is_zero_exact()))
            .collect();
        flats.insert(vanishing);
    }
    let flats: Vec<Vec<usize>> = flats.into_iter().collect();
    let below = |a: &Vec<usize>, b: &Vec<usize>| a != b && a.iter().all(|x| b.contains(x));
    // all chains
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..flats.len()).map(|i| vec![i]).collect();
    while let Some(c) = stack.pop() {
        let last = *c.last().unwrap();
        for j in 0..flats.len() {
            if below(&flats[last], &flats[j]) {
                let mut next = c.clone();
                next.push(j);
                stack.push(next);
            }
        }
        chains.push(c);
    }
    let top = chains.iter().map(Vec::len).max().unwrap_or(0);
    let by_len: Vec<Vec<Vec<usize>>> = (0..=top)
        .map(|k| {
            if k == 0 {
                vec![Vec::new()]
            } else {
                chains.iter().filter(|c| c.len() == k).cloned().collect()
            }
        })
        .collect();
    let boundary_rank = |k: usize| -> usize {
        // ∂ from chains of length k to length k-1
        if k == 0 || k > top {
            return 0;
        }
        let index: HashMap<&Vec<usize>, usize> =
            by_len[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rows = vec![vec![0i64; by_len[k].len()]; by_len[k - 1].len()];
        for (j, c) in by_len[k].iter().enumerate() {
            for skip in 0..c.len() {
                let mut face = c.clone();
                face.remove(skip);
                rows[index[&face]][j] = if skip % 2 == 0 { 1 } else { P - 1 };
            }
        }
        rank_mod_p(rows)
    };
    (0..=top)
        .map(|k| by_len[k].len() - boundary_rank(k) - boundary_rank(k + 1))
        .collect()
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let built: Vec<(String, ExactPipeline)> = GROUPS
        .iter()
        .map(|&(k, r)| (label(k, r), pipeline(k, r)))
        .collect();
    let build_time = start.elapsed();
    let mut outcomes = Vec::new();

    outcomes.push(run(1, "B3 = C3 end-to-end counts", Some(Duration::from_secs(30)), |fail| {
        let mut parts = Vec::new();
        for kind in ["B", "C"] {
            let p = pipeline(kind, 3);
            let (regions, facets) = (p.bounded_count(), p.facet_count());
            check(fail, regions == 15, || format!("{kind}3: {regions} bounded regions"));
            check(fail, facets == 10, || format!("{kind}3: {facets} facets"));
            let report = p.embedding().unwrap();
            check(fail, report.rank == 10 && report.bounded.len() == 15, || {
                format!("{kind}3: incidence {}x{} rank {}", report.bounded.len(), report.facets.len(), report.rank)
            });
            parts.push(format!("{kind}3: {regions} regions, {facets} facets"));
        }
        parts.join("; ")
    }));

    outcomes.push(run(2, "NCP proper part is a wedge of facet-many spheres", Some(Duration::from_secs(120)), |fail| {
        for (name, p) in &built {
            let n = p.system.rank() as isize;
            let oc = p.ncp.proper_order_complex(DEFAULT_SIMPLEX_BUDGET).unwrap();
            let betti = reduced_betti(&oc).nonzero();
            check(fail, betti == vec![(n - 2, p.facet_count())], || {
                format!("{name}: betti {betti:?}, facets {}", p.facet_count())
            });
        }
        format!("{} groups", built.len())
    }));

    outcomes.push(run(3, "Mobius number = (-1)^n x facet count", None, |fail| {
        for (name, p) in &built {
            let n = p.system.rank();
            let expected = if n % 2 == 0 { 1 } else { -1 } * p.facet_count() as i64;
            let mu = p.ncp.mobius_number();
            check(fail, mu == expected, || format!("{name}: mu = {mu}, expected {expected}"));
        }
        format!("{} groups", built.len())
    }));

    outcomes.push(run(4, "generic vector certificate (r.v)^2 >= lambda'^2 (r.r), r.v != 0", None, |fail| {
        let mut rays = 0;
        for (name, p) in &built {
            rays += p.rays.len();
            let bad = prop41_violations(&p.system, &p.rays, &p.generic);
            check(fail, bad.is_empty(), || format!("{name}: rays {bad:?}"));
        }
        format!("{rays} rays")
    }));

    outcomes.push(run(5, "mu(rho_i).v > 0, mu(rho_i).rho_j >= 0, mu(rho_{i+t}).rho_i = 0", None, |fail| {
        let mut checks = 0;
        for (name, p) in &built {
            let report = check_mu(&p.system, &p.ordered, &p.mu, &p.generic.v);
            checks += report.checks;
            check(fail, report.passed(), || format!("{name}: {report:?}"));
        }
        format!("{checks} dot products")
    }));

    outcomes.push(run(6, "f is a poset map and fibers equal X(w)", None, |fail| {
        let (mut pairs, mut fibers) = (0, 0);
        for (name, p) in &built {
            let pm = check_poset_map(&p.system, &p.ordered, &p.xc);
            pairs += pm.pairs_checked;
            check(fail, pm.passed(), || format!("{name}: {pm:?}"));
            let fr = fiber_check(&p.system, &p.ordered, &p.xc, &p.ncp).unwrap();
            fibers += fr.checked;
            check(fail, fr.passed(), || format!("{name}: fibers {fr:?}"));
        }
        format!("{pairs} face pairs, {fibers} fibers")
    }));

    outcomes.push(run(7, "intersection lattice homology = bounded-slice count", None, |fail| {
        let mut parts = Vec::new();
        for (kind, rank, expected) in [("A", 2, 2), ("A", 3, 6), ("B", 3, 15)] {
            let p = pipeline(kind, rank);
            let d = rank as isize - 2;
            let lattice = p.intersection_lattice();
            let oc = lattice.proper_order_complex(DEFAULT_SIMPLEX_BUDGET).unwrap();
            let betti = reduced_betti(&oc).nonzero();
            let oracle = oracle_lattice_betti(&p);
            let oracle_nonzero: Vec<(isize, usize)> = oracle
                .iter()
                .enumerate()
                .filter(|(_, &b)| b > 0)
                .map(|(k, &b)| (k as isize - 1, b))
                .collect();
            let regions = p.bounded_count();
            check(fail, betti == vec![(d, regions)], || format!("{kind}{rank}: betti {betti:?} vs {regions} regions"));
            check(fail, oracle_nonzero == betti, || format!("{kind}{rank}: oracle {oracle_nonzero:?} vs {betti:?}"));
            check(fail, regions == expected, || format!("{kind}{rank}: {regions} regions, expected {expected}"));
            parts.push(format!("{kind}{rank}: {regions}"));
        }
        parts.join(", ")
    }));

    outcomes.push(run(8, "facet-chamber incidence is disjoint, nonempty and injective", None, |fail| {
        for (name, p) in &built {
            let r = p.embedding().unwrap();
            check(fail, r.disjoint, || format!("{name}: overlapping columns"));
            check(fail, r.nonempty, || format!("{name}: empty column"));
            check(fail, r.injective, || format!("{name}: rank {} < {}", r.rank, r.facets.len()));
            check(fail, r.incident_bounded, || format!("{name}: incident chamber not bounded-slice"));
        }
        let c3 = pipeline("C", 3);
        let r = c3.embedding().unwrap();
        let weight = r
            .facets
            .iter()
            .position(|f| f == &vec![1, 3, 7])
            .map(|j| r.columns[j].len());
        check(fail, weight == Some(2), || format!("C3 facet (2,4,8): weight {weight:?}"));
        format!("C3 facet (2,4,8) covers {} chambers", weight.unwrap_or(0))
    }));

    outcomes.push(run(9, "explicit basis cycles span the top homology", None, |fail| {
        let mut total = 0;
        for (name, p) in &built {
            let d = p.system.rank() as isize - 2;
            let cycles = ncp_basis_cycles(&p.system, &p.ordered, &p.xc, &p.ncp).unwrap();
            total += cycles.len();
            check(fail, cycles.iter().all(|z| z.boundary().is_zero()), || format!("{name}: nonzero boundary"));
            let oc = p.ncp.proper_order_complex(DEFAULT_SIMPLEX_BUDGET).unwrap();
            let rank = homology_rank(&oc, d, &cycles);
            check(fail, rank == Some(p.facet_count()), || format!("{name}: cycle rank {rank:?}"));
        }
        format!("{total} cycles")
    }));

    outcomes.push(run(10, "reflection length = breadth-first T-word length", None, |fail| {
        let mut elements = 0;
        for (name, p) in &built {
            let bfs = p.system.reflection_length_bfs();
            let g = p.system.group();
            elements += g.len();
            let bad = g.ids().filter(|&w| g.length(w) != bfs[w.0]).count();
            check(fail, bad == 0, || format!("{name}: {bad} mismatches"));
        }
        format!("{elements} elements")
    }));

    println!("shared build of {} groups: {build_time:.2?}", built.len());
    for o in &outcomes {
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("[{verdict}] criterion {:>2}: {} ({}; {:.2?})", o.id, o.title, o.detail, o.elapsed);
        for f in &o.failures {
            println!("         {f}");
        }
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.failures.is_empty()).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
