//! Serializable check reports. Field order is fixed by the struct
//! declarations, so a given configuration and seed always produces the
//! same JSON bytes.

use num::integer::gcd;
use serde::{Deserialize, Serialize};

/// One named check on one affine instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Verification report for a single affine instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    #[serde(rename = "type")]
    pub family: String,
    pub label: String,
    pub case: String,
    pub r: u32,
    pub window: i64,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        family: String,
        label: String,
        case: String,
        r: u32,
        window: i64,
        seed: u64,
    ) -> Report {
        Report {
            family,
            label,
            case,
            r,
            window,
            seed,
            checks: Vec::new(),
            summary: Summary {
                total: 0,
                passed: 0,
                failed: 0,
            },
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.summary.total += 1;
        if check.pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "== {}  case {}  window {}  seed {}\n",
            self.label, self.case, self.window, self.seed
        );
        for c in &self.checks {
            let tag = if c.pass { "  ok" } else { "FAIL" };
            out.push_str(&format!("{tag}  {:<16} {}\n", c.name, c.witness));
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// The affine matrix of one instance with its classical invariants.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GcmReport {
    #[serde(rename = "type")]
    pub family: String,
    pub canonical: String,
    pub r: u32,
    pub case: String,
    pub label: String,
    pub size: usize,
    pub matrix: Vec<Vec<i64>>,
    pub det: i64,
    pub corank: usize,
    pub kac_labels: Vec<i64>,
    pub dual_kac_labels: Vec<i64>,
    pub symmetrizer: Vec<i64>,
}

impl GcmReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("{}  case {}  ({} nodes)\n", self.label, self.case, self.size);
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            out.push_str(&format!("  [{}]\n", cells.join(" ")));
        }
        out.push_str(&format!(
            "det {}  corank {}\nkac labels      {:?}\ndual kac labels {:?}\nsymmetrizer     {:?}\n",
            self.det, self.corank, self.kac_labels, self.dual_kac_labels, self.symmetrizer
        ));
        out
    }
}

/// One loop degree t^(k/r) of the fixed-point module.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisLayer {
    pub degree: String,
    pub numerator: i64,
    pub count: usize,
    pub elements: Vec<String>,
}

/// Γ-fixed basis grouped by loop degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisReport {
    #[serde(rename = "type")]
    pub family: String,
    pub r: u32,
    pub case: String,
    pub label: String,
    pub window: i64,
    pub total: usize,
    pub layers: Vec<BasisLayer>,
}

impl BasisReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}  case {}  window {}  ({} elements)\n",
            self.label, self.case, self.window, self.total
        );
        for layer in &self.layers {
            out.push_str(&format!("degree t^({}): {} elements\n", layer.degree, layer.count));
            for e in &layer.elements {
                out.push_str(&format!("  {e}\n"));
            }
        }
        out
    }
}

/// Exponent k in units of 1/r, reduced: degree_string(3, 3) = "1",
/// degree_string(-1, 2) = "-1/2".
pub fn degree_string(k: i64, r: u32) -> String {
    if k == 0 {
        return "0".to_string();
    }
    let r = i64::from(r);
    let g = gcd(k.abs(), r);
    let (num, den) = (k / g, r / g);
    if den == 1 {
        format!("{num}")
    } else {
        format!("{num}/{den}")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report structures serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_tracks_pushed_checks() {
        let mut r = Report::new(
            "A2".into(),
            "A2^(2)".into(),
            "II".into(),
            2,
            1,
            0,
        );
        r.push(CheckResult {
            name: "gcm".into(),
            instance: "A2^(2)".into(),
            pass: true,
            witness: "ok".into(),
        });
        r.push(CheckResult {
            name: "serre".into(),
            instance: "A2^(2)".into(),
            pass: false,
            witness: "broken".into(),
        });
        assert_eq!(r.summary.total, 2);
        assert_eq!(r.summary.passed, 1);
        assert_eq!(r.summary.failed, 1);
        assert!(!r.all_pass());
        assert!(r.render_text().contains("FAIL"));
    }

    #[test]
    fn json_round_trips_and_is_stable() {
        let mut r = Report::new(
            "D4".into(),
            "D4^(3)".into(),
            "IIIb".into(),
            3,
            2,
            7,
        );
        r.push(CheckResult {
            name: "rank".into(),
            instance: "D4^(3)".into(),
            pass: true,
            witness: "counts [14, 7, 7]".into(),
        });
        let j1 = to_json(&r);
        let back: Report = serde_json::from_str(&j1).unwrap();
        let j2 = to_json(&back);
        assert_eq!(j1, j2);
        assert!(j1.contains("\"type\": \"D4\""));
    }

    #[test]
    fn degree_strings_reduce() {
        assert_eq!(degree_string(0, 3), "0");
        assert_eq!(degree_string(3, 3), "1");
        assert_eq!(degree_string(-1, 2), "-1/2");
        assert_eq!(degree_string(4, 2), "2");
        assert_eq!(degree_string(-5, 3), "-5/3");
    }
}
