//! Builds the text and JSON renderings of every command from one result.

use std::fmt::Write as _;

use samelson::applications::{
    gauge_type_bound, governing_problem, homotopy_commutative, su4_commutator_order,
    ApplicationError,
};
use samelson::tables::{compare, fixtures, theorem_claims, ColumnStatus};
use samelson::{
    generator_matrix, samelson_order, Integer, OrderResult, ProductProblem, SamelsonError,
};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

pub enum Outcome {
    Done {
        code: u8,
        document: Value,
        text: String,
    },
    Failed {
        code: u8,
        message: String,
    },
}

fn invalid(message: impl Into<String>) -> Outcome {
    Outcome::Failed {
        code: 2,
        message: message.into(),
    }
}

fn internal(message: impl Into<String>) -> Outcome {
    Outcome::Failed {
        code: 3,
        message: message.into(),
    }
}

fn document(command: &str, input: Value, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": input,
        "result": result,
    })
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn problem_from_flags(a: i64, b: i64, n: i64) -> Result<ProductProblem, Outcome> {
    for (name, v) in [("a", a), ("b", b), ("n", n)] {
        if v < 1 {
            return Err(invalid(format!(
                "{name} must be a positive integer (got {v})"
            )));
        }
        if v > i64::from(u32::MAX) {
            return Err(invalid(format!("{name} is too large (got {v})")));
        }
    }
    ProductProblem::new(a as u32, b as u32, n as u32).map_err(|e| invalid(e.to_string()))
}

fn problem_json(p: &ProductProblem) -> Value {
    json!({ "a": s(p.a()), "b": s(p.b()), "n": s(p.n()), "k": s(p.k()) })
}

fn factorization_json(r: &OrderResult) -> Value {
    let mut m = Map::new();
    for (p, e) in r.factorization.iter() {
        m.insert(p.to_string(), s(e));
    }
    Value::Object(m)
}

fn ints_json(xs: &[Integer]) -> Value {
    Value::Array(xs.iter().map(s).collect())
}

/// `45 = 3^2·5`, or just `1`.
pub fn odd_order_text(r: &OrderResult) -> String {
    if r.factorization.is_empty() {
        r.d_odd.to_string()
    } else {
        format!("{} = {}", r.d_odd, r.factorization)
    }
}

fn solve(problem: &ProductProblem) -> Result<OrderResult, Outcome> {
    samelson_order(problem).map_err(|e| match e {
        SamelsonError::InvalidProblem(m) => invalid(m),
        SamelsonError::Internal(m) => internal(m),
    })
}

pub fn order(a: i64, b: i64, n: i64, with_certificate: bool) -> Outcome {
    let problem = match problem_from_flags(a, b, n) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let r = match solve(&problem) {
        Ok(r) => r,
        Err(o) => return o,
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "problem: a={} b={} n={} (k={})",
        problem.a(),
        problem.b(),
        problem.n(),
        problem.k()
    );
    let _ = writeln!(text, "odd order: {}", odd_order_text(&r));
    let _ = writeln!(text, "integral order (diagnostic): {}", r.d_integral);
    let _ = writeln!(text, "validity: {}", r.validity);
    if with_certificate {
        let cert: Vec<String> = r.certificate.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "certificate: [{}]", cert.join(", "));
    }

    let result = json!({
        "problem": problem_json(&problem),
        "d_odd": s(&r.d_odd),
        "factorization": factorization_json(&r),
        "d_integral": s(&r.d_integral),
        "validity": r.validity.as_str(),
        "certificate": if with_certificate { ints_json(&r.certificate) } else { Value::Null },
    });
    let input = json!({ "a": s(a), "b": s(b), "n": s(n), "certificate": with_certificate });
    Outcome::Done {
        code: 0,
        document: document("order", input, result),
        text,
    }
}

pub fn matrix(a: i64, b: i64, n: i64) -> Outcome {
    let problem = match problem_from_flags(a, b, n) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let gm = generator_matrix(&problem);
    let row_labels: Vec<String> = gm
        .row_basis
        .iter()
        .map(|r| format!("({},{},{})", r.p, r.q, r.m()))
        .collect();
    let col_labels: Vec<String> = gm
        .col_basis
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect();

    let mut text = String::new();
    let _ = writeln!(
        text,
        "generator matrix for {problem}: {} rows × {} columns",
        gm.matrix.rows(),
        gm.matrix.cols()
    );
    let _ = writeln!(text, "rows are (p,q,m); columns are (i,j)");
    let cells: Vec<Vec<String>> = gm
        .matrix
        .to_rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .chain(&col_labels)
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(1);
    let label_width = row_labels
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0);
    let header: Vec<String> = col_labels.iter().map(|c| format!("{c:>width$}")).collect();
    let _ = writeln!(text, "{:label_width$} {}", "", header.join(" "));
    for (label, row) in row_labels.iter().zip(&cells) {
        let row: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(text, "{label:<label_width$} {}", row.join(" "));
    }

    let result = json!({
        "problem": problem_json(&problem),
        "rows": gm.row_basis.iter().map(|r| json!({ "p": s(r.p), "q": s(r.q), "m": s(r.m()) })).collect::<Vec<_>>(),
        "columns": gm.col_basis.iter().map(|(i, j)| json!({ "i": s(i), "j": s(j) })).collect::<Vec<_>>(),
        "entries": gm.matrix.to_rows().iter().map(|r| ints_json(r)).collect::<Vec<_>>(),
    });
    Outcome::Done {
        code: 0,
        document: document("matrix", json!({ "a": s(a), "b": s(b), "n": s(n) }), result),
        text,
    }
}

pub fn table(theorem: u32) -> Outcome {
    let Some(claims) = theorem_claims(theorem) else {
        return invalid(format!("unknown theorem {theorem}; expected 1 or 2"));
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all_agree = true;
    for claim in &claims {
        let r = match solve(&claim.problem) {
            Ok(r) => r,
            Err(o) => return o,
        };
        let agree = r.d_odd == Integer::from(claim.stated_odd_order);
        all_agree &= agree;
        let marker = if agree { "AGREE" } else { "DISAGREE" };
        let p = &claim.problem;
        let _ = writeln!(
            text,
            "a={} b={} n={} k={}  computed {}  stated {}  {marker}  (integral {})",
            p.a(),
            p.b(),
            p.n(),
            p.k(),
            odd_order_text(&r),
            claim.stated_odd_order,
            r.d_integral,
        );
        rows.push(json!({
            "problem": problem_json(p),
            "computed_d_odd": s(&r.d_odd),
            "factorization": factorization_json(&r),
            "stated_d_odd": s(claim.stated_odd_order),
            "d_integral": s(&r.d_integral),
            "status": marker,
        }));
    }
    let agreeing = rows.iter().filter(|r| r["status"] == "AGREE").count();
    let _ = writeln!(text, "{agreeing}/{} AGREE", claims.len());
    Outcome::Done {
        code: if all_agree { 0 } else { 4 },
        document: document(
            "table",
            json!({ "theorem": s(theorem) }),
            json!({ "rows": rows, "all_agree": all_agree }),
        ),
        text,
    }
}

fn status_json(status: &ColumnStatus) -> Value {
    match status {
        ColumnStatus::MatchExact => json!({ "kind": "MATCH_EXACT" }),
        ColumnStatus::Match2Local { sign, exponent } => json!({
            "kind": "MATCH_2LOCAL",
            "sign": sign.to_string(),
            "exponent": s(exponent),
        }),
        ColumnStatus::Mismatch { rows } => json!({
            "kind": "MISMATCH",
            "rows": rows.iter().map(|r| json!({ "p": s(r.p), "q": s(r.q) })).collect::<Vec<_>>(),
        }),
    }
}

pub fn verify_paper() -> Outcome {
    let mut text = String::new();
    let mut tables = Vec::new();
    for t in fixtures() {
        let report = compare(&t);
        let _ = writeln!(text, "{}", report.summary());
        let mut columns = Vec::new();
        for c in &report.columns {
            let _ = writeln!(text, "{} {}: {}", report.id, c.label, c.status);
            let printed: Vec<String> = c.printed.iter().map(ToString::to_string).collect();
            let recomputed: Vec<String> = c.recomputed.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                text,
                "    printed ({}) recomputed ({})",
                printed.join(", "),
                recomputed.join(", ")
            );
            columns.push(json!({
                "label": c.label,
                "i": s(c.column.0),
                "j": s(c.column.1),
                "printed": c.printed.iter().map(s).collect::<Vec<_>>(),
                "recomputed": ints_json(&c.recomputed),
                "status": status_json(&c.status),
            }));
        }
        for note in &report.notes {
            let _ = writeln!(text, "{} note: {note}", report.id);
        }
        tables.push(json!({
            "id": report.id.label(),
            "problem": problem_json(&report.problem),
            "summary": report.summary(),
            "columns": columns,
            "notes": report.notes,
        }));
    }
    Outcome::Done {
        code: 0,
        document: document("verify-paper", json!({}), json!({ "tables": tables })),
        text,
    }
}

fn application_failure(e: ApplicationError) -> Outcome {
    match e {
        ApplicationError::Samelson(SamelsonError::Internal(m)) => internal(m),
        other => invalid(other.to_string()),
    }
}

pub fn commutative(n: u32, p: u64) -> Outcome {
    let verdict = match homotopy_commutative(n, p) {
        Ok(v) => v,
        Err(e) => return application_failure(e),
    };
    let mut text = format!("SU({n}) localized at p={p}: {}\n", verdict.value);
    if let Some(order) = &verdict.order {
        let _ = writeln!(
            text,
            "governing product: {} with odd order {}",
            order.problem,
            odd_order_text(order)
        );
    }
    if let Some(w) = &verdict.witness {
        let _ = writeln!(
            text,
            "witness: {} has p-adic valuation {} at p={}",
            w.problem, w.valuation, w.prime
        );
    }
    let result = json!({
        "verdict": verdict.value.as_str(),
        "governing_problem": governing_problem(n).map(|p| problem_json(&p)),
        "d_odd": verdict.order.as_ref().map(|o| s(&o.d_odd)),
        "witness": verdict.witness.as_ref().map(|w| json!({
            "problem": problem_json(&w.problem),
            "prime": s(w.prime),
            "valuation": s(w.valuation),
        })),
    });
    Outcome::Done {
        code: 0,
        document: document("commutative", json!({ "su": s(n), "prime": s(p) }), result),
        text,
    }
}

pub fn gauge(order: Option<&str>, su4: bool, p: u64) -> Outcome {
    let m: Integer = if su4 {
        su4_commutator_order().d_odd
    } else {
        let raw = order.unwrap_or_default();
        match raw.parse::<Integer>() {
            Ok(m) => m,
            Err(_) => return invalid(format!("--order expects a positive integer (got {raw:?})")),
        }
    };
    let bound = match gauge_type_bound(&m, p) {
        Ok(b) => b,
        Err(e) => return application_failure(e),
    };
    let text = format!(
        "commutator order {m}, p={p}: valuation {}, at most {bound} homotopy type{}\n",
        bound - 1,
        if bound == 1 { "" } else { "s" }
    );
    let input = json!({
        "order": order.map(s),
        "su4": su4,
        "prime": s(p),
    });
    let result = json!({
        "commutator_order": s(&m),
        "prime": s(p),
        "valuation": s(bound - 1),
        "bound": s(bound),
    });
    Outcome::Done {
        code: 0,
        document: document("gauge", input, result),
        text,
    }
}
