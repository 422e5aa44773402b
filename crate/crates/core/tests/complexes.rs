use ncp_core::algebra::FieldElement;
use ncp_core::complexes::*;
use ncp_core::coxeter::{BuildOptions, CoxeterDiagram, CoxeterSystem};
use ncp_core::rootorder::{ordered_roots, OrderedRoots};

struct Setup {
    system: CoxeterSystem<FieldElement>,
    ordered: OrderedRoots<FieldElement>,
    xc: XComplex,
    ncp: NcpLattice,
}

fn setup(kind: &str, rank: usize) -> Setup {
    let d = CoxeterDiagram::from_type(kind, rank).unwrap();
    let system = CoxeterSystem::build(&d, &BuildOptions::default()).unwrap();
    let ordered = ordered_roots(&system).unwrap();
    let xc = build_xc(&system, &ordered, DEFAULT_SIMPLEX_BUDGET).unwrap();
    let ncp = build_ncp(&system);
    Setup {
        system,
        ordered,
        xc,
        ncp,
    }
}

#[test]
fn lattice_sizes() {
    assert_eq!(setup("A", 1).ncp.len(), 2);
    assert_eq!(setup("A", 2).ncp.len(), 5);
    assert_eq!(setup("A", 3).ncp.len(), 14);
    assert_eq!(setup("B", 3).ncp.len(), 20);
    assert_eq!(setup("H", 3).ncp.len(), 32);
}

#[test]
fn lattice_is_graded_interval() {
    for (kind, rank) in [("A", 3), ("B", 3), ("H", 3)] {
        let s = setup(kind, rank);
        let g = s.system.group();
        assert_eq!(s.ncp.length(s.ncp.top()), rank);
        assert_eq!(s.ncp.element(s.ncp.top()), s.system.coxeter_element());
        for i in 0..s.ncp.len() {
            let u = s.ncp.element(i);
            for x in g.ids() {
                if s.system.precedes(x, u) {
                    assert!(s.ncp.contains(x));
                }
            }
        }
        for (a, b) in s.ncp.hasse() {
            assert_eq!(s.ncp.length(a) + 1, s.ncp.length(b));
        }
    }
}

#[test]
fn xc_shape() {
    let s = setup("A", 1);
    assert_eq!(s.xc.vertex_count(), 1);
    assert!(s.xc.edges().is_empty());
    assert_eq!(s.xc.facets(), &[vec![0]]);

    assert_eq!(setup("A", 2).xc.facets().len(), 2);
    let b3 = setup("B", 3);
    assert_eq!(b3.xc.vertex_count(), 9);
    assert_eq!(b3.xc.facets().len(), 10);
    assert!(b3.xc.facets().iter().all(|f| f.len() == 3));
}

#[test]
fn lemma48_and_poset_map() {
    for (kind, rank) in [("A", 2), ("A", 3), ("B", 3), ("H", 3)] {
        let s = setup(kind, rank);
        assert!(lemma48_violations(&s.system, &s.ordered, &s.xc).is_empty());
        let report = check_poset_map(&s.system, &s.ordered, &s.xc);
        assert!(report.passed(), "{kind}{rank}: {report:?}");
    }
}

#[test]
fn facets_map_to_c_and_vertices_to_reflections() {
    let s = setup("B", 3);
    for f in s.xc.facets() {
        assert_eq!(f_map(&s.system, &s.ordered, f), s.system.coxeter_element());
    }
    for i in 0..s.ordered.len() {
        assert_eq!(f_map(&s.system, &s.ordered, &[i]), s.ordered.reflection(i));
    }
}

#[test]
fn xw_special_cases() {
    let s = setup("A", 2);
    let g = s.system.group();
    let all = build_xw(&s.system, &s.ordered, &s.xc, s.system.coxeter_element()).unwrap();
    assert_eq!(&all, s.xc.complex());
    let empty = build_xw(&s.system, &s.ordered, &s.xc, g.identity()).unwrap();
    assert_eq!(empty.dimension(), -1);
    for i in 0..3 {
        let xw = build_xw(&s.system, &s.ordered, &s.xc, s.ordered.reflection(i)).unwrap();
        assert_eq!(xw.facets(), &[vec![i]]);
    }
    let not_below = g.ids().find(|&w| !s.ncp.contains(w)).unwrap();
    assert!(build_xw(&s.system, &s.ordered, &s.xc, not_below).is_err());
}

#[test]
fn fibers() {
    for (kind, rank) in [("A", 2), ("A", 3), ("B", 3)] {
        let s = setup(kind, rank);
        let report = fiber_check(&s.system, &s.ordered, &s.xc, &s.ncp).unwrap();
        assert!(report.passed());
        assert_eq!(report.checked, s.ncp.len() - 2);
    }
}

#[test]
fn homology_mobius_and_cycles() {
    for (kind, rank) in [("A", 1), ("A", 2), ("B", 2), ("A", 3), ("B", 3), ("H", 3)] {
        let s = setup(kind, rank);
        let facets = s.xc.facets().len();
        let oc = s.ncp.proper_order_complex(DEFAULT_SIMPLEX_BUDGET).unwrap();
        let d = rank as isize - 2;
        assert_eq!(reduced_betti(&oc).nonzero(), vec![(d, facets)], "{kind}{rank}");
        let sign = if rank % 2 == 0 { 1 } else { -1 };
        assert_eq!(s.ncp.mobius_number(), sign * facets as i64);
        let cycles = ncp_basis_cycles(&s.system, &s.ordered, &s.xc, &s.ncp).unwrap();
        assert!(cycles.iter().all(|z| z.boundary().is_zero()));
        assert_eq!(homology_rank(&oc, d, &cycles), Some(facets));
    }
}

#[test]
fn a2_cycles_are_differences_of_atoms() {
    let s = setup("A", 2);
    let cycles = ncp_basis_cycles(&s.system, &s.ordered, &s.xc, &s.ncp).unwrap();
    for z in cycles {
        assert_eq!(z.terms().len(), 2);
        assert!(z.terms().keys().all(|k| k.len() == 1));
        let sum: num_rational::BigRational = z.terms().values().sum();
        assert_eq!(sum, num_rational::BigRational::from_integer(0.into()));
    }
}
