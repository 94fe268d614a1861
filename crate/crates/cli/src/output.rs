//! Result documents.
//!
//! JSON output serializes with sorted keys and every number rounded to 12
//! significant digits, so repeated runs are byte-identical and the CSV and
//! JSON forms carry the same values. Numbers are linear-scale ratios by
//! default; `--log` switches every numeric leaf to its natural log (the
//! zero scalar then serializes as null).

use serde_json::{json, Map, Value};
use tropirank_core::decision::{RatingSolution, Violation};
use tropirank_core::{round_sig, FrontierDescription, FrontierKind, TropScalar, TropVector};

#[derive(Clone, Copy)]
pub struct Rendering {
    pub log_scale: bool,
}

impl Rendering {
    pub fn scalar(&self, x: TropScalar) -> Value {
        if self.log_scale {
            // -inf (the zero scalar) has no JSON number; serde maps it to null
            Value::from(round_sig(x.log(), 12))
        } else {
            Value::from(round_sig(x.value(), 12))
        }
    }

    pub fn scalar_text(&self, x: TropScalar) -> String {
        if self.log_scale {
            format!("{}", round_sig(x.log(), 12))
        } else {
            format!("{}", round_sig(x.value(), 12))
        }
    }

    pub fn vector(&self, x: &TropVector) -> Value {
        Value::Array(x.entries().iter().map(|&e| self.scalar(e)).collect())
    }

    pub fn pairs(&self, pairs: &[(TropScalar, TropScalar)]) -> Value {
        Value::Array(
            pairs
                .iter()
                .map(|&(a, b)| Value::Array(vec![self.scalar(a), self.scalar(b)]))
                .collect(),
        )
    }

    pub fn frontier(&self, f: &FrontierDescription) -> Value {
        let pieces: Vec<Value> = f
            .pieces
            .iter()
            .map(|p| {
                json!({
                    "alpha_lo": self.scalar(p.alpha_lo),
                    "alpha_hi": self.scalar(p.alpha_hi),
                    "m": p.m,
                    "l": p.l,
                    "coeff": self.scalar(p.coeff),
                    "exponent": round_sig(p.exponent(), 12),
                })
            })
            .collect();
        json!({
            "kind": match f.kind {
                FrontierKind::Point => "point",
                FrontierKind::Segment => "segment",
            },
            "alpha_min": self.scalar(f.alpha_min),
            "alpha_max": self.scalar(f.alpha_max),
            "beta_at_alpha_max": self.scalar(f.beta_at_alpha_max),
            "lambda_sigma": self.scalar(f.lambda_sigma),
            "mu_theta": self.scalar(f.mu_theta),
            "pieces": pieces,
        })
    }

    pub fn ratings(&self, labels: &[String], ratings: &TropVector) -> Value {
        let mut map = Map::new();
        for (label, &value) in labels.iter().zip(ratings.entries()) {
            map.insert(label.clone(), self.scalar(value));
        }
        Value::Object(map)
    }

    pub fn violations(&self, violations: &[Violation]) -> Value {
        Value::Array(
            violations
                .iter()
                .map(|v| Value::String(v.to_string()))
                .collect(),
        )
    }

    pub fn solution(
        &self,
        labels: &[String],
        solution: &RatingSolution,
        diagnostics: Value,
        samples: Option<&[(TropScalar, TropScalar)]>,
    ) -> Value {
        let mut doc = json!({
            "chosen": {
                "alpha": self.scalar(solution.chosen_alpha),
                "beta": self.scalar(solution.chosen_beta),
                "alpha_defaulted": solution.alpha_defaulted,
            },
            "diagnostics": diagnostics,
            "frontier": self.frontier(&solution.frontier),
            "generators": Value::Array(
                solution.generators.iter().map(|g| self.vector(g)).collect(),
            ),
            "ratings": self.ratings(labels, &solution.ratings),
        });
        if let Some(samples) = samples {
            doc["samples"] = self.pairs(samples);
        }
        doc
    }

    /// Plot-ready rows, one `alpha,beta` line per sample.
    pub fn frontier_csv(&self, samples: &[(TropScalar, TropScalar)]) -> String {
        let mut out = String::from("alpha,beta\n");
        for &(alpha, beta) in samples {
            out.push_str(&self.scalar_text(alpha));
            out.push(',');
            out.push_str(&self.scalar_text(beta));
            out.push('\n');
        }
        out
    }
}

/// Pretty JSON with a trailing newline; keys are already sorted because the
/// underlying map is ordered.
pub fn to_json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("valid document");
    text.push('\n');
    text
}
