//! Builds every object for one diagram in dependency order.

use crate::algebra::{Scalar, Vector};
use crate::arrangement::{self, Chamber, GenericVector};
use crate::complexes::{self, NcpLattice, XComplex};
use crate::coxeter::{BuildOptions, CoxeterDiagram, CoxeterScalar, CoxeterSystem};
use crate::embed::{self, EmbeddingReport, IntersectionLattice, MuComplex};
use crate::error::Result;
use crate::rootorder::{self, OrderedRoots};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub build: BuildOptions,
    pub lambda_denominator: u32,
    pub simplex_budget: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            build: BuildOptions::default(),
            lambda_denominator: arrangement::DEFAULT_LAMBDA_DENOMINATOR,
            simplex_budget: complexes::DEFAULT_SIMPLEX_BUDGET,
        }
    }
}

pub struct Pipeline<F: Scalar> {
    pub options: PipelineOptions,
    pub system: CoxeterSystem<F>,
    pub ordered: OrderedRoots<F>,
    pub ncp: NcpLattice,
    pub xc: XComplex,
    pub rays: Vec<Vector<F>>,
    pub generic: GenericVector<F>,
    pub chambers: Vec<Chamber<F>>,
    pub bounded: Vec<bool>,
    pub mu: MuComplex<F>,
}

impl<F: CoxeterScalar> Pipeline<F> {
    pub fn build(diagram: &CoxeterDiagram, options: &PipelineOptions) -> Result<Self> {
        let system = CoxeterSystem::build(diagram, &options.build)?;
        let ordered = rootorder::ordered_roots(&system)?;
        let ncp = complexes::build_ncp(&system);
        let xc = complexes::build_xc(&system, &ordered, options.simplex_budget)?;
        let rays = arrangement::enumerate_rays(&system);
        let lambda = arrangement::lambda_bound(&system, &rays, options.lambda_denominator);
        let generic = arrangement::generic_vector(&system, &ordered, &rays, &lambda)?;
        let chambers = arrangement::chambers(&system);
        let bounded = chambers
            .iter()
            .map(|c| arrangement::bounded_slice(&system, c, &generic.v))
            .collect::<Result<Vec<_>>>()?;
        let mu = embed::mu_complex(&system, &ordered, &xc)?;
        Ok(Pipeline {
            options: options.clone(),
            system,
            ordered,
            ncp,
            xc,
            rays,
            generic,
            chambers,
            bounded,
            mu,
        })
    }
}

impl<F: Scalar> Pipeline<F> {
    pub fn bounded_count(&self) -> usize {
        self.bounded.iter().filter(|&&b| b).count()
    }

    pub fn facet_count(&self) -> usize {
        self.xc.facets().len()
    }

    pub fn embedding(&self) -> Result<EmbeddingReport> {
        embed::pstar_matrix(&self.system, &self.mu, &self.chambers, &self.generic.v)
    }

    pub fn intersection_lattice(&self) -> IntersectionLattice {
        embed::build_intersection_lattice(&self.system)
    }
}
