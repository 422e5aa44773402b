//! JSON documents. Scalars are arrays of rational strings: coordinates in
//! the power basis `1, θ, θ², …` of the field described in the header.

use crate::config::Problem;
use anyhow::Result;
use ncp_core::algebra::{FieldElement, Matrix, NumberField, Vector};
use ncp_core::complexes::reduced_betti;
use ncp_core::{ExactPipeline, ExactSystem};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use std::sync::Arc;

pub type ScalarJson = Vec<String>;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FieldHeader {
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_polynomial: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isolating_interval: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Header {
    pub format: &'static str,
    pub problem: Problem,
    pub label: String,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub bipartite_order: Vec<usize>,
    pub s: usize,
    pub field: FieldHeader,
}

pub fn system_field(system: &ExactSystem) -> Option<Arc<NumberField>> {
    system.gram().entries().iter().find_map(|e| e.field().cloned())
}

pub fn header(problem: &Problem, system: &ExactSystem) -> Header {
    let field = match system_field(system) {
        Some(f) => {
            let (lo, hi) = f.isolating_interval();
            FieldHeader {
                degree: f.degree(),
                minimal_polynomial: Some(f.minimal_polynomial().iter().map(|c| c.to_string()).collect()),
                isolating_interval: Some([lo.to_string(), hi.to_string()]),
                theta: Some(f.theta_f64()),
            }
        }
        None => FieldHeader {
            degree: 1,
            minimal_polynomial: None,
            isolating_interval: None,
            theta: None,
        },
    };
    Header {
        format: "ncph/1",
        problem: problem.clone(),
        label: system.input_diagram().label().to_string(),
        coxeter_matrix: system.diagram().matrix().to_vec(),
        bipartite_order: system.bipartite_order().to_vec(),
        s: system.s(),
        field,
    }
}

pub struct Encoder {
    degree: usize,
}

impl Encoder {
    pub fn new(system: &ExactSystem) -> Self {
        Encoder {
            degree: system_field(system).map_or(1, |f| f.degree()),
        }
    }

    pub fn scalar(&self, x: &FieldElement) -> ScalarJson {
        x.padded_coords(self.degree).iter().map(BigRational::to_string).collect()
    }

    pub fn vector(&self, v: &Vector<FieldElement>) -> Vec<ScalarJson> {
        v.iter().map(|x| self.scalar(x)).collect()
    }

    pub fn matrix(&self, m: &Matrix<FieldElement>) -> Vec<Vec<ScalarJson>> {
        (0..m.rows()).map(|i| self.vector(&m.row(i))).collect()
    }
}

pub fn rational(x: &BigRational) -> String {
    x.to_string()
}

pub fn ncp(problem: &Problem, p: &ExactPipeline) -> Value {
    let enc = Encoder::new(&p.system);
    let g = p.system.group();
    let elements: Vec<Value> = (0..p.ncp.len())
        .map(|i| {
            json!({
                "id": i,
                "length": p.ncp.length(i),
                "matrix": enc.matrix(g.matrix(p.ncp.element(i))),
            })
        })
        .collect();
    let hasse: Vec<[usize; 2]> = p.ncp.hasse().into_iter().map(|(a, b)| [a, b]).collect();
    json!({
        "header": header(problem, &p.system),
        "elements": elements,
        "hasse": hasse,
        "mobius": p.ncp.mobius_number(),
    })
}

pub fn xc(problem: &Problem, p: &ExactPipeline) -> Value {
    let enc = Encoder::new(&p.system);
    let vertices: Vec<_> = p.ordered.roots().iter().map(|r| enc.vector(r)).collect();
    let edges: Vec<[usize; 2]> = p.xc.edges().iter().map(|&(a, b)| [a, b]).collect();
    json!({
        "header": header(problem, &p.system),
        "vertices": vertices,
        "tau": p.ordered.tau_positions(),
        "edges": edges,
        "facets": p.xc.facets(),
    })
}

pub fn lattice(problem: &Problem, p: &ExactPipeline) -> Result<Value> {
    let lattice = p.intersection_lattice();
    let flats: Vec<Value> = (0..lattice.len())
        .map(|i| {
            json!({
                "id": i,
                "codimension": lattice.codimension(i),
                "roots": lattice.flats()[i],
            })
        })
        .collect();
    let hasse: Vec<[usize; 2]> = lattice.poset().hasse().into_iter().map(|(a, b)| [a, b]).collect();
    let oc = lattice.proper_order_complex(problem.simplex_budget)?;
    let betti: Vec<[i64; 2]> = reduced_betti(&oc)
        .nonzero()
        .into_iter()
        .map(|(d, b)| [d as i64, b as i64])
        .collect();
    Ok(json!({
        "header": header(problem, &p.system),
        "flats": flats,
        "hasse": hasse,
        "mobius": lattice.mobius_number(),
        "reducedBetti": betti,
    }))
}

pub fn embed(problem: &Problem, p: &ExactPipeline) -> Result<Value> {
    let enc = Encoder::new(&p.system);
    let report = p.embedding()?;
    let chambers: Vec<Value> = p
        .chambers
        .iter()
        .enumerate()
        .map(|(i, _)| json!({"id": i, "boundedSlice": p.bounded[i]}))
        .collect();
    Ok(json!({
        "header": header(problem, &p.system),
        "lambda": rational(&p.generic.lambda),
        "a": rational(&p.generic.a),
        "v": enc.vector(&p.generic.v),
        "mu": enc.matrix(&p.mu.mu),
        "facets": report.facets,
        "chambers": chambers,
        "rows": report.bounded,
        "columns": report.columns,
        "incidence": report.incidence,
        "rank": report.rank,
        "injective": report.injective,
        "disjoint": report.disjoint,
        "nonempty": report.nonempty,
        "incidentBounded": report.incident_bounded,
        "covered": report.covered,
    }))
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
