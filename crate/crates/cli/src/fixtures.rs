//! Built-in example jobs with their expected results, run by `--fixtures`.

use crate::job::parse_job;
use crate::report::{run_job, ReportBody};

pub struct FixtureCase {
    pub name: &'static str,
    pub document: &'static str,
    pub expected: &'static str,
    check: fn(&ReportBody) -> Option<String>,
}

pub struct FixtureOutcome {
    pub name: &'static str,
    pub expected: &'static str,
    pub got: String,
    pub passed: bool,
}

macro_rules! case {
    ($name:literal, $expected:literal, $check:expr) => {
        FixtureCase {
            name: $name,
            document: include_str!(concat!("../fixtures/", $name, ".json")),
            expected: $expected,
            check: $check,
        }
    };
}

/// Returns what was found, or `None` if the body has the wrong kind.
pub fn cases() -> Vec<FixtureCase> {
    vec![
        case!("belyi_genus_two", "genus 2, exponents [1, 3], Φ_10", |b| match b {
            ReportBody::Belyi { genus, cm_exponents, deck_charpoly, .. } => Some(format!(
                "genus {genus}, exponents {cm_exponents:?}, {}",
                deck_charpoly.factored
            )),
            _ => None,
        }),
        case!("monodromy_two_pair", "μ = 150, Φ_30^2 present", |b| match b {
            ReportBody::Monodromy { milnor_number, charpoly, .. } => Some(format!(
                "μ = {milnor_number}, Φ_30^{} present",
                charpoly.factors.iter().find(|f| f.0 == 30).map_or(0, |f| f.1)
            )),
            _ => None,
        }),
        case!("monodromy_phi26_phi12", "Φ_12·Φ_26", |b| match b {
            ReportBody::Monodromy { charpoly, .. } => Some(charpoly.factored.clone()),
            _ => None,
        }),
        case!("monodromy_e7", "Φ_1·Φ_9", |b| match b {
            ReportBody::Monodromy { charpoly, .. } => Some(charpoly.factored.clone()),
            _ => None,
        }),
        case!("spectrum_cusp", "[5/6]", |b| match b {
            ReportBody::Spectrum { spectrum, .. } => Some(format!("[{}]", spectrum.join(", "))),
            _ => None,
        }),
        case!("resolve_5_2", "rupture m = 10, neighbors [1, 4, 5]", |b| match b {
            ReportBody::Resolve { nodes, edges, ruptures, .. } => {
                let r = *ruptures.first()?;
                let mut neigh: Vec<u64> = edges
                    .iter()
                    .filter_map(|(u, v)| if *u == r { Some(*v) } else if *v == r { Some(*u) } else { None })
                    .map(|x| nodes[x].multiplicity)
                    .collect();
                neigh.sort_unstable();
                Some(format!("rupture m = {}, neighbors {neigh:?}", nodes[r].multiplicity))
            }
            _ => None,
        }),
        case!("albanese_local_5_2", "dimension 2, y^10 = x^4(x-z)^1z^5", |b| match b {
            ReportBody::AlbaneseLocal { albanese, .. } => Some(format!(
                "dimension {}, {}",
                albanese.total_dimension,
                albanese.factors.iter().map(|f| f.belyi.to_string()).collect::<Vec<_>>().join("; ")
            )),
            _ => None,
        }),
        case!("sextic_superabundance", "s = 1", |b| match b {
            ReportBody::Superabundance { superabundance, .. } => Some(format!("s = {superabundance}")),
            _ => None,
        }),
        case!("sextic_alexander", "Φ_6", |b| alexander_poly(b)),
        case!("general_position_alexander", "1", |b| alexander_poly(b)),
        case!("c52_alexander", "Φ_10", |b| alexander_poly(b)),
        case!("c52_cover", "dimension 2, conductors [10]", |b| match b {
            ReportBody::Cover { dimension, cm_conductors, .. } => {
                Some(format!("dimension {dimension}, conductors {cm_conductors:?}"))
            }
            _ => None,
        }),
        case!("sextic_cover_modules", "Φ_6", |b| match b {
            ReportBody::Cover { h1_charpoly, .. } => Some(h1_charpoly.factored.clone()),
            _ => None,
        }),
        case!("c52_mw_rank", "rank 4", |b| mw_rank(b)),
        case!("hirano_mw_rank", "rank 18", |b| mw_rank(b)),
        case!("no_phi_d_mw_rank", "rank 0", |b| mw_rank(b)),
    ]
}

fn alexander_poly(b: &ReportBody) -> Option<String> {
    match b {
        ReportBody::Alexander { polynomial, .. } => polynomial.as_ref().map(|p| p.factored.clone()),
        _ => None,
    }
}

fn mw_rank(b: &ReportBody) -> Option<String> {
    match b {
        ReportBody::MwRank { exact: Some(e), .. } => Some(format!("rank {e}")),
        ReportBody::MwRank { bound, .. } => Some(format!("rank ≤ {bound}")),
        _ => None,
    }
}

pub fn run_case(case: &FixtureCase) -> FixtureOutcome {
    let got = match parse_job(case.document) {
        Err(e) => format!("schema error: {e}"),
        Ok(job) => match run_job(&job) {
            Err(e) => format!("error: {e}"),
            Ok(rep) => (case.check)(&rep.result).unwrap_or_else(|| "unexpected report kind".into()),
        },
    };
    FixtureOutcome {
        name: case.name,
        expected: case.expected,
        passed: got == case.expected,
        got,
    }
}

pub fn run_all() -> Vec<FixtureOutcome> {
    cases().iter().map(run_case).collect()
}

/// Plain-text table, one row per fixture.
pub fn render_table(outcomes: &[FixtureOutcome]) -> String {
    let w = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for o in outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:w$}  expected {}", o.name, o.expected));
        if !o.passed {
            out.push_str(&format!(", got {}", o.got));
        }
        out.push('\n');
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} fixtures passed\n", outcomes.len()));
    out
}
