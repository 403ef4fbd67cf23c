//! Job documents: JSON objects with a `command` field and command-specific
//! keys. Parsing validates the whole document up front and reports every
//! violation with its path.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Value};

use planecurve::alexander::{CurveConfiguration, SingularPoint};
use planecurve::belyi::BelyiCover;
use planecurve::mordell_weil::FiberDescriptor;
use planecurve::singularity::{AdeType, PuiseuxCharacteristic, SingularityDescriptor};
use planecurve::{CyclotomicNumber, CyclotomicProduct, IntPolynomial};

pub const COMMANDS: [&str; 9] = [
    "monodromy",
    "spectrum",
    "resolve",
    "albanese-local",
    "belyi",
    "alexander",
    "superabundance",
    "cover",
    "mw-rank",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError(pub Vec<Violation>);

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for SchemaError {}

#[derive(Clone, Debug, PartialEq)]
pub enum MonodromyInput {
    Germ(SingularityDescriptor),
    Raw(IntPolynomial),
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlexanderInput {
    Formula { p: u64, q: u64 },
    BoundOnly,
    UserSupplied(IntPolynomial),
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoverInput {
    Curve { curve: CurveConfiguration, p: u64, q: u64, n: u64 },
    Modules { modules: Vec<IntPolynomial>, n: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlexanderSource {
    Given(CyclotomicProduct),
    Curve { curve: CurveConfiguration, p: u64, q: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Monodromy(MonodromyInput),
    Spectrum { p: u64, q: u64 },
    Resolve(PuiseuxCharacteristic),
    AlbaneseLocal { germ: PuiseuxCharacteristic, n: u64 },
    Belyi(BelyiCover),
    Alexander { curve: CurveConfiguration, input: AlexanderInput },
    Superabundance { curve: CurveConfiguration, p: u64, q: u64 },
    Cover(CoverInput),
    MwRank {
        alexander: AlexanderSource,
        d: u64,
        fiber: FiberDescriptor,
        albanese_multiplicity_known: bool,
    },
}

impl Job {
    pub fn command(&self) -> &'static str {
        match self {
            Job::Monodromy(_) => "monodromy",
            Job::Spectrum { .. } => "spectrum",
            Job::Resolve(_) => "resolve",
            Job::AlbaneseLocal { .. } => "albanese-local",
            Job::Belyi(_) => "belyi",
            Job::Alexander { .. } => "alexander",
            Job::Superabundance { .. } => "superabundance",
            Job::Cover(_) => "cover",
            Job::MwRank { .. } => "mw-rank",
        }
    }
}

/// Collects violations while walking a document.
#[derive(Default)]
struct Validator {
    errors: Vec<Violation>,
}

fn child(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

fn index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

impl Validator {
    fn fail(&mut self, path: &str, message: impl Into<String>) {
        self.errors.push(Violation {
            path: path.to_string(),
            message: message.into(),
        });
    }

    fn object<'a>(&mut self, v: &'a Value, path: &str) -> Option<&'a Map<String, Value>> {
        let o = v.as_object();
        if o.is_none() {
            self.fail(path, "expected an object");
        }
        o
    }

    fn array<'a>(&mut self, v: &'a Value, path: &str) -> Option<&'a Vec<Value>> {
        let a = v.as_array();
        if a.is_none() {
            self.fail(path, "expected an array");
        }
        a
    }

    fn only_keys(&mut self, obj: &Map<String, Value>, path: &str, allowed: &[&str]) {
        let allowed: BTreeSet<&str> = allowed.iter().copied().collect();
        for k in obj.keys() {
            if !allowed.contains(k.as_str()) {
                self.fail(&child(path, k), "unknown key");
            }
        }
    }

    fn required<'a>(&mut self, obj: &'a Map<String, Value>, path: &str, key: &str) -> Option<&'a Value> {
        let v = obj.get(key);
        if v.is_none() {
            self.fail(&child(path, key), "missing required key");
        }
        v
    }

    fn uint(&mut self, v: &Value, path: &str) -> Option<u64> {
        let n = v.as_u64();
        if n.is_none() {
            self.fail(path, "expected a nonnegative integer");
        }
        n
    }

    fn uint_at(&mut self, obj: &Map<String, Value>, path: &str, key: &str) -> Option<u64> {
        let v = self.required(obj, path, key)?;
        self.uint(v, &child(path, key))
    }

    fn int_at_least(&mut self, obj: &Map<String, Value>, path: &str, key: &str, min: u64) -> Option<u64> {
        let n = self.uint_at(obj, path, key)?;
        if n < min {
            self.fail(&child(path, key), format!("must be at least {min}"));
            return None;
        }
        Some(n)
    }

    fn flag(&mut self, obj: &Map<String, Value>, path: &str, key: &str, default: Option<bool>) -> Option<bool> {
        match obj.get(key) {
            None => {
                if default.is_none() {
                    self.fail(&child(path, key), "missing required key");
                }
                default
            }
            Some(v) => {
                let b = v.as_bool();
                if b.is_none() {
                    self.fail(&child(path, key), "expected a boolean");
                }
                b
            }
        }
    }

    fn uint_pair(&mut self, v: &Value, path: &str) -> Option<(u64, u64)> {
        let a = self.array(v, path)?;
        if a.len() != 2 {
            self.fail(path, "expected a pair of integers");
            return None;
        }
        let x = self.uint(&a[0], &index(path, 0));
        let y = self.uint(&a[1], &index(path, 1));
        Some((x?, y?))
    }

    fn puiseux(&mut self, v: &Value, path: &str) -> Option<PuiseuxCharacteristic> {
        let a = self.array(v, path)?;
        let pairs: Vec<Option<(u64, u64)>> = a
            .iter()
            .enumerate()
            .map(|(i, x)| self.uint_pair(x, &index(path, i)))
            .collect();
        let pairs: Option<Vec<_>> = pairs.into_iter().collect();
        match PuiseuxCharacteristic::new(pairs?) {
            Ok(pc) => Some(pc),
            Err(e) => {
                self.fail(path, e.to_string());
                None
            }
        }
    }

    fn polynomial(&mut self, v: &Value, path: &str) -> Option<IntPolynomial> {
        let a = self.array(v, path)?;
        let mut coeffs = Vec::with_capacity(a.len());
        let mut ok = true;
        for (i, c) in a.iter().enumerate() {
            match integer(c) {
                Some(b) => coeffs.push(b),
                None => {
                    self.fail(&index(path, i), "expected an integer or an integer string");
                    ok = false;
                }
            }
        }
        ok.then(|| IntPolynomial::new(coeffs))
    }

    fn nonzero_polynomial(&mut self, v: &Value, path: &str) -> Option<IntPolynomial> {
        let p = self.polynomial(v, path)?;
        if p.is_zero() {
            self.fail(path, "the zero polynomial is not allowed");
            return None;
        }
        Some(p)
    }

    fn factor_list(&mut self, v: &Value, path: &str) -> Option<CyclotomicProduct> {
        let a = self.array(v, path)?;
        let mut out = Vec::new();
        for (i, x) in a.iter().enumerate() {
            let p = index(path, i);
            let (n, e) = self.uint_pair(x, &p)?;
            if n == 0 {
                self.fail(&index(&p, 0), "cyclotomic index must be positive");
                return None;
            }
            let Ok(e) = u32::try_from(e) else {
                self.fail(&index(&p, 1), "exponent too large");
                return None;
            };
            out.push((n, e));
        }
        Some(CyclotomicProduct::from_factors(out))
    }

    fn rational(&mut self, v: &Value, path: &str) -> Option<BigRational> {
        let q = match v {
            Value::String(s) => s.trim().parse::<BigRational>().ok(),
            Value::Number(_) => integer(v).map(BigRational::from_integer),
            _ => None,
        };
        if q.is_none() {
            self.fail(path, "expected a rational string \"p/q\"");
        }
        q
    }

    fn cyclotomic_number(&mut self, v: &Value, path: &str) -> Option<CyclotomicNumber> {
        let obj = self.object(v, path)?;
        self.only_keys(obj, path, &["conductor", "coeffs"]);
        let conductor = self.int_at_least(obj, path, "conductor", 1);
        let coeffs_path = child(path, "coeffs");
        let coeffs = self
            .required(obj, path, "coeffs")
            .and_then(|c| self.array(c, &coeffs_path))
            .map(|c| {
                c.iter()
                    .enumerate()
                    .map(|(i, x)| self.rational(x, &index(&coeffs_path, i)))
                    .collect::<Vec<_>>()
            })?;
        let coeffs: Option<Vec<BigRational>> = coeffs.into_iter().collect();
        Some(CyclotomicNumber::new(conductor?, coeffs?))
    }

    /// A germ given by exactly one of `pairs`, `one_pair` or `ade`.
    fn descriptor(&mut self, obj: &Map<String, Value>, path: &str) -> Option<SingularityDescriptor> {
        let keys: Vec<&str> = ["pairs", "one_pair", "ade"]
            .into_iter()
            .filter(|k| obj.contains_key(*k))
            .collect();
        if keys.len() != 1 {
            self.fail(path, "give exactly one of \"pairs\", \"one_pair\", \"ade\"");
            return None;
        }
        let key = keys[0];
        let p = child(path, key);
        let v = &obj[key];
        match key {
            "pairs" => self.puiseux(v, &p).map(SingularityDescriptor::Puiseux),
            "one_pair" => {
                let (a, b) = self.uint_pair(v, &p)?;
                match SingularityDescriptor::one_pair(a, b) {
                    Ok(d) => Some(d),
                    Err(e) => {
                        self.fail(&p, e.to_string());
                        None
                    }
                }
            }
            _ => {
                let Some(s) = v.as_str() else {
                    self.fail(&p, "expected an ADE name such as \"E6\"");
                    return None;
                };
                match s.parse::<AdeType>() {
                    Ok(t) => Some(SingularityDescriptor::Ade(t)),
                    Err(e) => {
                        self.fail(&p, e.to_string());
                        None
                    }
                }
            }
        }
    }

    fn point(&mut self, v: &Value, path: &str) -> Option<SingularPoint> {
        let obj = self.object(v, path)?;
        self.only_keys(obj, path, &["location", "type"]);
        let loc_path = child(path, "location");
        let location = self.required(obj, path, "location").and_then(|l| {
            let a = self.array(l, &loc_path)?;
            let cs: Vec<_> = a
                .iter()
                .enumerate()
                .map(|(i, c)| self.cyclotomic_number(c, &index(&loc_path, i)))
                .collect();
            if a.len() != 3 {
                self.fail(&loc_path, "expected 3 projective coordinates");
                return None;
            }
            let cs: Option<Vec<_>> = cs.into_iter().collect();
            let [x, y, z]: [CyclotomicNumber; 3] = cs?.try_into().ok()?;
            Some([x, y, z])
        });
        let type_path = child(path, "type");
        let descriptor = self.required(obj, path, "type").and_then(|t| {
            let o = self.object(t, &type_path)?;
            self.only_keys(o, &type_path, &["pairs", "one_pair", "ade"]);
            self.descriptor(o, &type_path)
        });
        match SingularPoint::new(location?, descriptor?) {
            Ok(p) => Some(p),
            Err(e) => {
                self.fail(&loc_path, e.to_string());
                None
            }
        }
    }

    fn curve(&mut self, v: &Value, path: &str) -> Option<CurveConfiguration> {
        let obj = self.object(v, path)?;
        self.only_keys(
            obj,
            path,
            &["degree", "points", "components", "irreducible", "transversal_at_infinity"],
        );
        let degree = self.int_at_least(obj, path, "degree", 1);
        let points_path = child(path, "points");
        let points = self.required(obj, path, "points").and_then(|p| {
            let a = self.array(p, &points_path)?;
            let pts: Vec<_> = a
                .iter()
                .enumerate()
                .map(|(i, x)| self.point(x, &index(&points_path, i)))
                .collect();
            pts.into_iter().collect::<Option<Vec<_>>>()
        });
        let components = match obj.get("components") {
            Some(_) => self.int_at_least(obj, path, "components", 1),
            None => Some(1),
        };
        let irreducible = self.flag(obj, path, "irreducible", Some(true));
        let transversal = self.flag(obj, path, "transversal_at_infinity", Some(true));
        let cfg = CurveConfiguration::new(degree?, points?).ok()?;
        match cfg.with_components(components?, irreducible?) {
            Ok(mut cfg) => {
                cfg.transversal_at_infinity = transversal?;
                Some(cfg)
            }
            Err(e) => {
                self.fail(&child(path, "components"), e.to_string());
                None
            }
        }
    }

    fn coprime_pq(&mut self, obj: &Map<String, Value>, path: &str) -> Option<(u64, u64)> {
        let p = self.int_at_least(obj, path, "p", 2);
        let q = self.int_at_least(obj, path, "q", 2);
        let (p, q) = (p?, q?);
        if num_integer::gcd(p, q) != 1 {
            self.fail(path, format!("p = {p} and q = {q} must be coprime"));
            return None;
        }
        Some((p, q))
    }

    fn fiber(&mut self, v: &Value, path: &str) -> Option<FiberDescriptor> {
        let obj = self.object(v, path)?;
        self.only_keys(obj, path, &["cm_conductor", "simple", "trivial_trace"]);
        let cm_conductor = match obj.get("cm_conductor") {
            None | Some(Value::Null) => Some(None),
            Some(_) => self.int_at_least(obj, path, "cm_conductor", 1).map(Some),
        };
        let simple = self.flag(obj, path, "simple", None);
        let trivial_trace = self.flag(obj, path, "trivial_trace", None);
        Some(FiberDescriptor {
            cm_conductor: cm_conductor?,
            simple: simple?,
            trivial_trace: trivial_trace?,
        })
    }
}

fn integer(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

/// Parses and validates a job document.
pub fn parse_job(document: &str) -> Result<Job, SchemaError> {
    let value: Value = serde_json::from_str(document).map_err(|e| {
        SchemaError(vec![Violation {
            path: "$".into(),
            message: format!("malformed JSON: {e}"),
        }])
    })?;
    parse_job_value(&value)
}

pub fn parse_job_value(value: &Value) -> Result<Job, SchemaError> {
    let mut v = Validator::default();
    let job = parse_inner(&mut v, value);
    match job {
        Some(job) if v.errors.is_empty() => Ok(job),
        _ => {
            if v.errors.is_empty() {
                v.fail("$", "invalid job");
            }
            Err(SchemaError(v.errors))
        }
    }
}

fn parse_inner(v: &mut Validator, value: &Value) -> Option<Job> {
    let root = "$";
    let obj = v.object(value, root)?;
    let command = match obj.get("command").and_then(Value::as_str) {
        Some(c) if COMMANDS.contains(&c) => c,
        Some(c) => {
            v.fail("$.command", format!("unknown command {c:?}; expected one of {}", COMMANDS.join(", ")));
            return None;
        }
        None => {
            v.fail("$.command", "missing or non-string command");
            return None;
        }
    };
    let keys = |extra: &[&'static str]| -> Vec<&'static str> {
        let mut k = vec!["command"];
        k.extend_from_slice(extra);
        k
    };
    match command {
        "monodromy" => {
            v.only_keys(obj, root, &keys(&["pairs", "one_pair", "ade", "charpoly"]));
            if let Some(c) = obj.get("charpoly") {
                if obj.contains_key("pairs") || obj.contains_key("one_pair") || obj.contains_key("ade") {
                    v.fail(root, "give exactly one of \"pairs\", \"one_pair\", \"ade\", \"charpoly\"");
                    return None;
                }
                let p = v.nonzero_polynomial(c, "$.charpoly")?;
                return Some(Job::Monodromy(MonodromyInput::Raw(p)));
            }
            v.descriptor(obj, root).map(|d| Job::Monodromy(MonodromyInput::Germ(d)))
        }
        "spectrum" => {
            v.only_keys(obj, root, &keys(&["p", "q"]));
            let (p, q) = v.coprime_pq(obj, root)?;
            Some(Job::Spectrum { p, q })
        }
        "resolve" => {
            v.only_keys(obj, root, &keys(&["pairs"]));
            let pairs = v.required(obj, root, "pairs")?;
            v.puiseux(pairs, "$.pairs").map(Job::Resolve)
        }
        "albanese-local" => {
            v.only_keys(obj, root, &keys(&["pairs", "n"]));
            let germ = v.required(obj, root, "pairs").and_then(|p| v.puiseux(p, "$.pairs"));
            let n = v.int_at_least(obj, root, "n", 2);
            Some(Job::AlbaneseLocal { germ: germ?, n: n? })
        }
        "belyi" => {
            v.only_keys(obj, root, &keys(&["a", "b", "c", "d"]));
            let a = v.uint_at(obj, root, "a");
            let b = v.uint_at(obj, root, "b");
            let c = v.uint_at(obj, root, "c");
            let d = v.uint_at(obj, root, "d");
            match BelyiCover::new(a?, b?, c?, d?) {
                Ok(cover) => Some(Job::Belyi(cover)),
                Err(e) => {
                    v.fail(root, e.to_string());
                    None
                }
            }
        }
        "alexander" => {
            v.only_keys(obj, root, &keys(&["curve", "p", "q", "polynomial"]));
            let curve = v.required(obj, root, "curve").and_then(|c| v.curve(c, "$.curve"));
            let has_pq = obj.contains_key("p") || obj.contains_key("q");
            let input = match (has_pq, obj.get("polynomial")) {
                (true, Some(_)) => {
                    v.fail(root, "give either p and q or a polynomial, not both");
                    None
                }
                (true, None) => v.coprime_pq(obj, root).map(|(p, q)| AlexanderInput::Formula { p, q }),
                (false, Some(poly)) => v
                    .nonzero_polynomial(poly, "$.polynomial")
                    .map(AlexanderInput::UserSupplied),
                (false, None) => Some(AlexanderInput::BoundOnly),
            };
            Some(Job::Alexander { curve: curve?, input: input? })
        }
        "superabundance" => {
            v.only_keys(obj, root, &keys(&["curve", "p", "q"]));
            let curve = v.required(obj, root, "curve").and_then(|c| v.curve(c, "$.curve"));
            let pq = v.coprime_pq(obj, root);
            let (p, q) = pq?;
            Some(Job::Superabundance { curve: curve?, p, q })
        }
        "cover" => {
            v.only_keys(obj, root, &keys(&["curve", "p", "q", "modules", "n"]));
            let n = v.int_at_least(obj, root, "n", 2);
            match (obj.get("curve"), obj.get("modules")) {
                (Some(c), None) => {
                    let curve = v.curve(c, "$.curve");
                    let pq = v.coprime_pq(obj, root);
                    let (p, q) = pq?;
                    Some(Job::Cover(CoverInput::Curve { curve: curve?, p, q, n: n? }))
                }
                (None, Some(m)) => {
                    let a = v.array(m, "$.modules")?;
                    let modules: Vec<_> = a
                        .iter()
                        .enumerate()
                        .map(|(i, x)| v.nonzero_polynomial(x, &index("$.modules", i)))
                        .collect();
                    let modules: Option<Vec<_>> = modules.into_iter().collect();
                    Some(Job::Cover(CoverInput::Modules { modules: modules?, n: n? }))
                }
                _ => {
                    v.fail(root, "give exactly one of \"curve\" or \"modules\"");
                    None
                }
            }
        }
        "mw-rank" => {
            v.only_keys(
                obj,
                root,
                &keys(&["alexander", "d", "fiber", "albanese_multiplicity_known"]),
            );
            let d = v.int_at_least(obj, root, "d", 2);
            let fiber = v.required(obj, root, "fiber").and_then(|f| v.fiber(f, "$.fiber"));
            let known = v.flag(obj, root, "albanese_multiplicity_known", Some(false));
            let alexander = v.required(obj, root, "alexander").and_then(|a| {
                let path = "$.alexander";
                let o = v.object(a, path)?;
                v.only_keys(o, path, &["factors", "coeffs", "curve", "p", "q"]);
                let present: Vec<&str> = ["factors", "coeffs", "curve"]
                    .into_iter()
                    .filter(|k| o.contains_key(*k))
                    .collect();
                match present.as_slice() {
                    ["factors"] => v
                        .factor_list(&o["factors"], "$.alexander.factors")
                        .map(AlexanderSource::Given),
                    ["coeffs"] => {
                        let p = v.nonzero_polynomial(&o["coeffs"], "$.alexander.coeffs")?;
                        match planecurve::factor_cyclotomic(&p) {
                            Ok(f) => Some(AlexanderSource::Given(f)),
                            Err(e) => {
                                v.fail("$.alexander.coeffs", e.to_string());
                                None
                            }
                        }
                    }
                    ["curve"] => {
                        let curve = v.curve(&o["curve"], "$.alexander.curve");
                        let pq = v.coprime_pq(o, path);
                        let (p, q) = pq?;
                        Some(AlexanderSource::Curve { curve: curve?, p, q })
                    }
                    _ => {
                        v.fail(path, "give exactly one of \"factors\", \"coeffs\", \"curve\"");
                        None
                    }
                }
            });
            Some(Job::MwRank {
                alexander: alexander?,
                d: d?,
                fiber: fiber?,
                albanese_multiplicity_known: known?,
            })
        }
        _ => unreachable!("command list checked above"),
    }
}
