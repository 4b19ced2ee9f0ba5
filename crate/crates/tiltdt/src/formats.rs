//! JSON file formats for quivers, charges, series, run transcripts and reports.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use tiltdt_core::series::QAlgebra;
use tiltdt_core::{
    CentralCharge, ChargeStatus, GreenRun, HalfPowerPoly, IndependenceReport, Permutation, QSeries,
    Quiver, RatFunc, Rational, RationalComplex, RunStatus,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("arrow #{index} {arrow}: {reason}")]
    Arrow {
        index: usize,
        arrow: String,
        reason: String,
    },
    #[error("invalid quiver: {0}")]
    Quiver(tiltdt_core::Error),
    #[error("charge z_{index}: {reason}")]
    Charge { index: usize, reason: String },
    #[error("charge has {found} values, quiver has {expected} vertices")]
    ChargeLength { expected: usize, found: usize },
    #[error("series term #{index}: {reason}")]
    Term { index: usize, reason: String },
}

#[derive(Serialize, Deserialize)]
struct QuiverDoc {
    arrows: Vec<Vec<u64>>,
    vertices: usize,
}

/// Parses `{"vertices": n, "arrows": [[i, j, m], ...]}`; `m` defaults to 1.
pub fn parse_quiver(text: &str) -> Result<Quiver, FormatError> {
    let doc: QuiverDoc = serde_json::from_str(text)?;
    let n = doc.vertices;
    let mut arrows = Vec::with_capacity(doc.arrows.len());
    for (index, a) in doc.arrows.iter().enumerate() {
        let arrow = format!("{a:?}");
        let (s, t, m) = match a.as_slice() {
            [s, t] => (*s, *t, 1),
            [s, t, m] => (*s, *t, *m),
            _ => {
                return Err(FormatError::Arrow {
                    index: index + 1,
                    arrow,
                    reason: "expected [source, target] or [source, target, multiplicity]".into(),
                })
            }
        };
        arrows.push((s as usize, t as usize, m));
        // validate incrementally so the diagnostic names the first bad arrow
        if let Err(e) = Quiver::new(n, &arrows) {
            return Err(FormatError::Arrow {
                index: index + 1,
                arrow,
                reason: e.to_string(),
            });
        }
    }
    Quiver::new(n, &arrows).map_err(FormatError::Quiver)
}

/// Canonical bytes: keys in alphabetical order, arrows sorted by `(source, target)`.
pub fn quiver_to_json(q: &Quiver) -> String {
    let doc = QuiverDoc {
        arrows: q
            .arrows()
            .into_iter()
            .map(|(s, t, m)| vec![s as u64, t as u64, m])
            .collect(),
        vertices: q.n(),
    };
    serde_json::to_string(&doc).expect("quiver serializes")
}

fn parse_rational(v: &Value) -> Result<Rational, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(BigInt::from(i)))
            .ok_or_else(|| format!("{n} is not an integer; use a \"p/q\" string")),
        Value::String(s) => {
            let s = s.trim();
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (s, "1"),
            };
            let p = BigInt::from_str(p).map_err(|_| format!("bad numerator in {s:?}"))?;
            let q = BigInt::from_str(q).map_err(|_| format!("bad denominator in {s:?}"))?;
            if q == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(p, q))
        }
        other => Err(format!("expected integer or \"p/q\" string, found {other}")),
    }
}

#[derive(Deserialize)]
struct ChargeDoc {
    z: Vec<Vec<Value>>,
}

/// Parses `{"z": [[re, im], ...]}` with integer or `"p/q"` components.
pub fn parse_charge(text: &str) -> Result<CentralCharge, FormatError> {
    let doc: ChargeDoc = serde_json::from_str(text)?;
    let mut values = Vec::with_capacity(doc.z.len());
    for (i, pair) in doc.z.iter().enumerate() {
        let index = i + 1;
        let [re, im] = pair.as_slice() else {
            return Err(FormatError::Charge {
                index,
                reason: "expected [re, im]".into(),
            });
        };
        let re = parse_rational(re).map_err(|reason| FormatError::Charge { index, reason })?;
        let im = parse_rational(im).map_err(|reason| FormatError::Charge { index, reason })?;
        let w = RationalComplex::new(re, im);
        if !w.in_half_plane() {
            return Err(FormatError::Charge {
                index,
                reason: format!(
                    "{w} is not in the upper half-plane (need im > 0, or im = 0 and re < 0)"
                ),
            });
        }
        values.push(w);
    }
    CentralCharge::new(values).map_err(|e| FormatError::Charge {
        index: 0,
        reason: e.to_string(),
    })
}

pub fn parse_charge_for(text: &str, q: &Quiver) -> Result<CentralCharge, FormatError> {
    let z = parse_charge(text)?;
    if z.n() != q.n() {
        return Err(FormatError::ChargeLength {
            expected: q.n(),
            found: z.n(),
        });
    }
    Ok(z)
}

fn rational_to_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Ok(i) = i64::try_from(r.to_integer()) {
            return Value::from(i);
        }
    }
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn charge_to_json(z: &CentralCharge) -> String {
    let pairs: Vec<Value> = z
        .values()
        .iter()
        .map(|w| Value::Array(vec![rational_to_json(&w.re), rational_to_json(&w.im)]))
        .collect();
    serde_json::json!({ "z": pairs }).to_string()
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    exp: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    rank: usize,
    degree: u32,
    terms: Vec<TermDoc>,
}

/// `{"rank": n, "degree": D, "terms": [{"exp": [...], "num": "...", "den": "..."}]}`.
pub fn series_to_json(s: &QSeries) -> String {
    let doc = SeriesDoc {
        rank: s.rank(),
        degree: s.degree(),
        terms: s
            .terms()
            .into_iter()
            .map(|(e, c)| TermDoc {
                exp: e.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("series serializes")
}

/// Reads a series into the algebra of `q`; the file does not carry the form.
pub fn parse_series(text: &str, q: &Quiver) -> Result<QSeries, FormatError> {
    let doc: SeriesDoc = serde_json::from_str(text)?;
    if doc.rank != q.n() {
        return Err(FormatError::Term {
            index: 0,
            reason: format!(
                "rank {} does not match quiver with {} vertices",
                doc.rank,
                q.n()
            ),
        });
    }
    let algebra = QAlgebra::for_quiver(q, doc.degree);
    let mut terms = Vec::with_capacity(doc.terms.len());
    for (i, t) in doc.terms.into_iter().enumerate() {
        let bad = |reason: String| FormatError::Term {
            index: i + 1,
            reason,
        };
        let num = HalfPowerPoly::from_str(&t.num).map_err(|e| bad(e.to_string()))?;
        let den = HalfPowerPoly::from_str(&t.den).map_err(|e| bad(e.to_string()))?;
        let c = RatFunc::new(num, den).map_err(|e| bad(e.to_string()))?;
        terms.push((t.exp, c));
    }
    algebra.series(terms).map_err(|e| FormatError::Term {
        index: 0,
        reason: e.to_string(),
    })
}

#[derive(Serialize)]
struct StepDoc {
    vertex: usize,
    class: Vec<i64>,
    phase: f64,
}

#[derive(Serialize)]
struct TranscriptDoc {
    status: &'static str,
    steps: Vec<StepDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutation: Option<Vec<usize>>,
    final_quiver: Value,
}

/// Run transcript; `permutation` is present iff the run is maximal.
pub fn transcript_to_json(run: &GreenRun, permutation: Option<&Permutation>) -> String {
    let doc = TranscriptDoc {
        status: match run.status {
            RunStatus::MaximalReached => "maximal",
            RunStatus::BudgetExceeded => "budget_exceeded",
        },
        steps: run
            .steps
            .iter()
            .map(|s| StepDoc {
                vertex: s.vertex,
                class: s.stable_class.entries().to_vec(),
                phase: s.phase_display,
            })
            .collect(),
        permutation: permutation.map(|p| p.images().to_vec()),
        final_quiver: serde_json::from_str(&quiver_to_json(&run.final_quiver.principal_part()))
            .expect("valid JSON"),
    };
    serde_json::to_string(&doc).expect("transcript serializes")
}

pub fn report_to_json(report: &IndependenceReport) -> String {
    let results: Vec<Value> = report
        .results
        .iter()
        .map(|r| {
            serde_json::json!({
                "charge_index": r.charge_index,
                "status": match r.status {
                    ChargeStatus::Ok => "ok",
                    ChargeStatus::Nondiscrete => "nondiscrete",
                    ChargeStatus::Infinite => "infinite",
                },
            })
        })
        .collect();
    let comparisons: Vec<Value> = report
        .comparisons
        .iter()
        .map(|c| serde_json::json!({ "i": c.i, "j": c.j, "equal": c.equal }))
        .collect();
    serde_json::json!({ "results": results, "comparisons": comparisons }).to_string()
}
