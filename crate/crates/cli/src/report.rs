//! Typed report documents and the job runner.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use planecurve::alexander::{
    self, adjoint_degree, alexander_bound_only, alexander_polynomial, alexander_user_supplied,
    cover_albanese_report, cover_h1_charpoly, AlexanderMethod,
};
use planecurve::belyi::{self, BelyiCover};
use planecurve::mordell_weil::{rank_report, FiberDescriptor, RankReason};
use planecurve::resolution::{acampo_charpoly, local_albanese, resolution_tree, LocalAlbaneseReport, TreeNode};
use planecurve::singularity::{cm_criterion, cm_verdict, spectrum_one_pair, CmStatus, CmVerdict};
use planecurve::{factor_cyclotomic, CyclotomicProduct, Error};

use crate::job::{AlexanderInput, AlexanderSource, CoverInput, Job, MonodromyInput};

pub const REPORT_SCHEMA: &str = "planecurve.report.v1";

/// A polynomial shown both as a product of cyclotomic factors and expanded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyView {
    pub factored: String,
    pub expanded: String,
    pub degree: usize,
    /// `(n, e)` for each factor `Φ_n^e`, increasing in `n`.
    pub factors: Vec<(u64, u32)>,
    /// Expanded coefficients, lowest degree first, as decimal strings.
    pub coeffs: Vec<String>,
    pub cyclotomic: bool,
}

impl From<&CyclotomicProduct> for PolyView {
    fn from(p: &CyclotomicProduct) -> Self {
        let expanded = p.expand();
        PolyView {
            factored: p.factored_string(),
            expanded: expanded.to_string(),
            degree: p.degree(),
            factors: p.factors().iter().map(|(n, e)| (*n, *e)).collect(),
            coeffs: expanded.coeffs().iter().map(|c| c.to_string()).collect(),
            cyclotomic: p.is_cyclotomic(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmView {
    pub status: CmStatus,
    pub multiple_roots: Vec<(u64, u32)>,
    pub remainder_squarefree: bool,
    pub value_at_minus_one: String,
}

impl From<CmVerdict> for CmView {
    fn from(v: CmVerdict) -> Self {
        CmView {
            status: v.status,
            multiple_roots: v.witness.multiple_roots,
            remainder_squarefree: v.witness.remainder_squarefree,
            value_at_minus_one: v.witness.value_at_minus_one.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportBody {
    Monodromy {
        germ: Option<String>,
        charpoly: PolyView,
        milnor_number: usize,
        cm: CmView,
    },
    Spectrum {
        p: u64,
        q: u64,
        spectrum: Vec<String>,
        count: usize,
    },
    Resolve {
        pairs: Vec<(u64, u64)>,
        nodes: Vec<TreeNode>,
        edges: Vec<(usize, usize)>,
        ruptures: Vec<usize>,
        charpoly: PolyView,
    },
    AlbaneseLocal {
        pairs: Vec<(u64, u64)>,
        albanese: LocalAlbaneseReport,
    },
    Belyi {
        cover: BelyiCover,
        equation: String,
        genus: u64,
        stabilizers: [u64; 3],
        cm_exponents: Vec<u64>,
        cm_conductors: Vec<u64>,
        deck_charpoly: PolyView,
        adjoint_dimension: u64,
    },
    Alexander {
        method: AlexanderMethod,
        degree: u64,
        points: usize,
        local_bound: PolyView,
        superabundance: Option<usize>,
        polynomial: Option<PolyView>,
    },
    Superabundance {
        p: u64,
        q: u64,
        degree: u64,
        adjoint_degree: i64,
        points: usize,
        superabundance: usize,
    },
    Cover {
        n: u64,
        superabundance: Option<usize>,
        h1_charpoly: PolyView,
        dimension: u64,
        cm_conductors: Vec<u64>,
    },
    MwRank {
        alexander: PolyView,
        holonomy_order: u64,
        phi_d_exponent: u32,
        bound: u64,
        exact: Option<u64>,
        reason: RankReason,
        fiber: FiberDescriptor,
        albanese_multiplicity_known: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub result: ReportBody,
    pub summary: String,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn cm_line(cm: &CmView) -> String {
    match cm.status {
        CmStatus::CmByUnibranched => "CM type: yes (unibranched germ)".into(),
        CmStatus::CmByCriterion => "CM type: yes (semisimple, Δ(-1) ≠ 0)".into(),
        CmStatus::CriterionInapplicable => format!(
            "CM type: criterion does not apply (multiple roots {:?}, Δ(-1) = {})",
            cm.multiple_roots, cm.value_at_minus_one
        ),
    }
}

/// Runs a validated job.
pub fn run_job(job: &Job) -> Result<Report, Error> {
    let mut summary = String::new();
    let result = match job {
        Job::Monodromy(input) => {
            let (germ, poly, cm) = match input {
                MonodromyInput::Germ(d) => {
                    let poly = d.charpoly()?;
                    (Some(d.to_string()), poly, cm_verdict(d)?)
                }
                MonodromyInput::Raw(p) => {
                    let poly = factor_cyclotomic(p)?;
                    let cm = cm_criterion(&poly);
                    (None, poly, cm)
                }
            };
            let charpoly = PolyView::from(&poly);
            let cm = CmView::from(cm);
            if let Some(g) = &germ {
                writeln!(summary, "germ: {g}").unwrap();
            }
            writeln!(summary, "characteristic polynomial: {}", charpoly.factored).unwrap();
            writeln!(summary, "expanded: {}", charpoly.expanded).unwrap();
            writeln!(summary, "{}", cm_line(&cm)).unwrap();
            ReportBody::Monodromy {
                germ,
                milnor_number: charpoly.degree,
                charpoly,
                cm,
            }
        }
        Job::Spectrum { p, q } => {
            let s = spectrum_one_pair(*p, *q)?;
            let spectrum: Vec<String> = s.iter().map(|r| r.to_string()).collect();
            writeln!(summary, "spectrum of u^{p} = v^{q} below 1: {}", join(&spectrum)).unwrap();
            ReportBody::Spectrum {
                p: *p,
                q: *q,
                count: spectrum.len(),
                spectrum,
            }
        }
        Job::Resolve(pc) => {
            let rt = resolution_tree(pc);
            let charpoly = PolyView::from(&acampo_charpoly(&rt)?);
            let ruptures = rt.rupture_ids().to_vec();
            writeln!(summary, "{} divisors, ruptures {:?}", rt.nodes().len() - 1, ruptures).unwrap();
            for r in &ruptures {
                let neigh: Vec<u64> = rt.oriented_neighbors(*r).iter().map(|x| rt.multiplicity(*x)).collect();
                writeln!(
                    summary,
                    "rupture {r}: multiplicity {}, neighbors {}",
                    rt.multiplicity(*r),
                    join(&neigh)
                )
                .unwrap();
            }
            writeln!(summary, "A'Campo characteristic polynomial: {}", charpoly.factored).unwrap();
            ReportBody::Resolve {
                pairs: pc.pairs().to_vec(),
                nodes: rt.nodes().to_vec(),
                edges: rt.edges().to_vec(),
                ruptures,
                charpoly,
            }
        }
        Job::AlbaneseLocal { germ, n } => {
            let albanese = local_albanese(germ, *n)?;
            writeln!(summary, "N = {n}: total dimension {}", albanese.total_dimension).unwrap();
            for f in &albanese.factors {
                writeln!(
                    summary,
                    "rupture {} (m = {}): {} genus {}, CM by ℚ(ζ_{}) exponents {:?}",
                    f.rupture_id,
                    f.multiplicity,
                    f.belyi,
                    f.genus,
                    join(&f.cm_conductors),
                    f.cm_exponents
                )
                .unwrap();
            }
            for s in &albanese.skipped {
                writeln!(summary, "rupture {} skipped: {}", s.rupture_id, s.reason).unwrap();
            }
            ReportBody::AlbaneseLocal {
                pairs: germ.pairs().to_vec(),
                albanese,
            }
        }
        Job::Belyi(cover) => {
            let deck = PolyView::from(&belyi::deck_charpoly(cover)?);
            let genus = belyi::genus(cover);
            let cm_exponents = belyi::cm_exponents(cover)?;
            let cm_conductors = belyi::cm_conductors(cover)?;
            writeln!(summary, "{cover}: genus {genus}").unwrap();
            writeln!(summary, "deck transformation: {}", deck.factored).unwrap();
            writeln!(summary, "holomorphic eigenvalue exponents: {cm_exponents:?}").unwrap();
            ReportBody::Belyi {
                cover: *cover,
                equation: cover.to_string(),
                genus,
                stabilizers: cover.stabilizers(),
                cm_exponents,
                cm_conductors,
                deck_charpoly: deck,
                adjoint_dimension: belyi::adjoint_dimension(cover),
            }
        }
        Job::Alexander { curve, input } => {
            let rep = match input {
                AlexanderInput::Formula { p, q } => alexander_polynomial(curve, *p, *q)?,
                AlexanderInput::BoundOnly => alexander_bound_only(curve)?,
                AlexanderInput::UserSupplied(poly) => alexander_user_supplied(curve, poly)?,
            };
            let local_bound = PolyView::from(&rep.local_bound);
            let polynomial = rep.polynomial.as_ref().map(PolyView::from);
            writeln!(summary, "local bound: {}", local_bound.factored).unwrap();
            if let Some(s) = rep.superabundance {
                writeln!(summary, "superabundance s = {s}").unwrap();
            }
            match &polynomial {
                Some(p) => writeln!(summary, "Alexander polynomial: {} = {}", p.factored, p.expanded).unwrap(),
                None => writeln!(summary, "Alexander polynomial: not determined").unwrap(),
            }
            ReportBody::Alexander {
                method: rep.method,
                degree: curve.degree,
                points: curve.points.len(),
                local_bound,
                superabundance: rep.superabundance,
                polynomial,
            }
        }
        Job::Superabundance { curve, p, q } => {
            let m = adjoint_degree(curve.degree, *p, *q)?;
            let s = alexander::superabundance(curve, *p, *q)?;
            let points = curve.points.iter().filter(|pt| !pt.descriptor.is_node()).count();
            writeln!(summary, "{points} points, curves of degree {m}: s = {s}").unwrap();
            ReportBody::Superabundance {
                p: *p,
                q: *q,
                degree: curve.degree,
                adjoint_degree: m,
                points,
                superabundance: s,
            }
        }
        Job::Cover(input) => {
            let (n, s, h1) = match input {
                CoverInput::Curve { curve, p, q, n } => {
                    let rep = cover_albanese_report(curve, *p, *q, *n)?;
                    (*n, Some(rep.superabundance), rep.h1_charpoly)
                }
                CoverInput::Modules { modules, n } => (*n, None, cover_h1_charpoly(modules, *n)?),
            };
            let view = PolyView::from(&h1);
            let dimension = (h1.degree() / 2) as u64;
            writeln!(summary, "N = {n}: H_1 characteristic polynomial {}", view.factored).unwrap();
            writeln!(summary, "Albanese dimension {dimension}, CM fields ℚ(ζ_n) for n in [{}]", join(&h1.indices())).unwrap();
            ReportBody::Cover {
                n,
                superabundance: s,
                dimension,
                cm_conductors: h1.indices(),
                h1_charpoly: view,
            }
        }
        Job::MwRank {
            alexander,
            d,
            fiber,
            albanese_multiplicity_known,
        } => {
            let alex = match alexander {
                AlexanderSource::Given(p) => p.clone(),
                AlexanderSource::Curve { curve, p, q } => alexander_polynomial(curve, *p, *q)?
                    .polynomial
                    .ok_or_else(|| Error::Computation("Alexander polynomial not determined".into()))?,
            };
            let r = rank_report(&alex, *d, *fiber, *albanese_multiplicity_known)?;
            let view = PolyView::from(&alex);
            writeln!(summary, "Alexander polynomial {}, Φ_{d} exponent {}", view.factored, r.phi_d_exponent).unwrap();
            match r.exact {
                Some(e) => writeln!(summary, "Mordell-Weil rank = {e} ({:?})", r.reason).unwrap(),
                None => writeln!(summary, "Mordell-Weil rank ≤ {} ({:?})", r.bound, r.reason).unwrap(),
            }
            writeln!(
                summary,
                "assumed: fiber {:?}, albanese multiplicity known = {}",
                r.fiber, r.albanese_multiplicity_known
            )
            .unwrap();
            ReportBody::MwRank {
                alexander: view,
                holonomy_order: r.holonomy_order,
                phi_d_exponent: r.phi_d_exponent,
                bound: r.bound,
                exact: r.exact,
                reason: r.reason,
                fiber: r.fiber,
                albanese_multiplicity_known: r.albanese_multiplicity_known,
            }
        }
    };
    Ok(Report {
        schema: REPORT_SCHEMA.into(),
        command: job.command().into(),
        result,
        summary,
    })
}
