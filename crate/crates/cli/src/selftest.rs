//! Built-in reproduction suite: the two S3 worked computations, end to end.
//! Prints one PASS/FAIL line per check; nonzero exit on any failure.

use serde_json::json;
use wild_mckay::group::MetacyclicGroup;
use wild_mckay::invariants::{invariant_report, BValue, Classification};
use wild_mckay::moduli::{count_extensions, enumerate_jumps, stratum_dimension};
use wild_mckay::motive::{euler_number, stringy_motive, tame_contribution};
use wild_mckay::representation::{age, Representation};
use wild_mckay::vfunction::v_rep;

struct Check {
    name: &'static str,
    expected: String,
    actual: String,
}

impl Check {
    fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn checks() -> Vec<Check> {
    let g = MetacyclicGroup::new(3, 2, 2).expect("S3 data is valid");
    let p2 = Representation::from_pairs(&g, &[(3, 1)]).unwrap();
    let p1p1 = Representation::from_pairs(&g, &[(3, 0), (3, 0)]).unwrap();
    let mut out = Vec::new();
    let mut check = |name: &'static str, expected: &str, actual: String| {
        out.push(Check {
            name,
            expected: expected.to_string(),
            actual,
        });
    };

    check(
        "root-of-unity exponent c",
        "1",
        g.root_of_unity_exponent().to_string(),
    );
    check(
        "admissible jumps, gamma = 0, r <= 2",
        "[1, 2]",
        format!("{:?}", enumerate_jumps(&g, 0, 2)),
    );
    check(
        "admissible jumps, gamma = 1, r <= 5",
        "[1, 5]",
        format!("{:?}", enumerate_jumps(&g, 1, 5)),
    );
    let dims: Vec<u64> = [(0, 1), (0, 2), (1, 1), (1, 5)]
        .iter()
        .map(|&(gamma, r)| stratum_dimension(&g, gamma, r).unwrap())
        .collect();
    check("stratum dimensions", "[1, 2, 1, 2]", format!("{dims:?}"));
    let v_p2: Vec<String> = [(0, 1), (0, 2), (1, 1), (1, 5)]
        .iter()
        .map(|&(gamma, r)| v_rep(&g, &p2, gamma, r).unwrap().to_string())
        .collect();
    check(
        "v-values of P2",
        r#"["2", "3", "2", "4"]"#,
        format!("{v_p2:?}"),
    );
    check(
        "v-value of P1+P1 at (1, 1)",
        "3",
        v_rep(&g, &p1p1, 1, 1).unwrap().to_string(),
    );
    check("age of tau on P2", "1", age(&g, &p2, 1).to_string());
    check("age of tau on P1+P1", "1", age(&g, &p1p1, 1).to_string());
    check(
        "tame contribution for P2",
        "L^3 + L^2",
        tame_contribution(&g, &p2).to_string(),
    );
    check(
        "stringy motive of P2/S3",
        "L^3 + 4*L^2 + L",
        stringy_motive(&g, &p2).to_string(),
    );
    check(
        "stringy motive of (P1+P1)/S3",
        "L^6 + L^5 + L^4",
        stringy_motive(&g, &p1p1).to_string(),
    );
    check(
        "euler number of P2/S3",
        "6",
        euler_number(&g, &p2).unwrap().to_string(),
    );
    check(
        "euler number of (P1+P1)/S3",
        "3",
        euler_number(&g, &p1p1).unwrap().to_string(),
    );

    let rep_p2 = invariant_report(&g, &p2).unwrap();
    check(
        "a-invariant of P2",
        "1 attained",
        format!(
            "{}{}",
            rep_p2.a_value,
            if rep_p2.a_attained {
                " attained"
            } else {
                " unattained"
            }
        ),
    );
    check(
        "b-invariant of P2",
        "4",
        match rep_p2.b_value {
            BValue::Finite(b) => b.to_string(),
            BValue::Infinite => "infinite".into(),
            BValue::Undefined => "undefined".into(),
        },
    );
    let rep_p1p1 = invariant_report(&g, &p1p1).unwrap();
    check(
        "b-invariant of P1+P1",
        "1",
        match rep_p1p1.b_value {
            BValue::Finite(b) => b.to_string(),
            BValue::Infinite => "infinite".into(),
            BValue::Undefined => "undefined".into(),
        },
    );
    check(
        "classification of P2/S3",
        "canonical_not_terminal",
        classification_name(rep_p2.classification).to_string(),
    );
    check(
        "classification of (P1+P1)/S3",
        "canonical_not_terminal",
        classification_name(rep_p1p1.classification).to_string(),
    );
    check(
        "extension count q=3, gamma=1, r=1",
        "2",
        count_extensions(&g, 3, 1, 1).unwrap().to_string(),
    );
    check(
        "extension count q=3, gamma=1, r=5",
        "6",
        count_extensions(&g, 3, 1, 5).unwrap().to_string(),
    );
    out
}

fn classification_name(c: Classification) -> &'static str {
    match c {
        Classification::Terminal => "terminal",
        Classification::CanonicalNotTerminal => "canonical_not_terminal",
        Classification::NotCanonical => "not_canonical",
    }
}

pub fn run(json_mode: bool) -> Result<(), super::Failure> {
    let checks = checks();
    let passed = checks.iter().all(Check::passed);
    if json_mode {
        let rows: Vec<_> = checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed(),
                })
            })
            .collect();
        let doc = json!({
            "command": "selftest",
            "result": { "checks": rows, "passed": passed },
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        for c in &checks {
            if c.passed() {
                println!("PASS  {:<40} {}", c.name, c.actual);
            } else {
                println!(
                    "FAIL  {:<40} expected {}, got {}",
                    c.name, c.expected, c.actual
                );
            }
        }
        println!(
            "{}: {} checks",
            if passed { "all passed" } else { "FAILURES" },
            checks.len()
        );
    }
    if passed {
        Ok(())
    } else {
        Err(super::Failure::SelftestFailed)
    }
}
