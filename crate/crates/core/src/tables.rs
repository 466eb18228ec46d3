//! Published generator tables, transcribed as exact rationals, and an audit
//! that classifies every printed column against the recomputed generator
//! matrix.
//!
//! A printed column either matches exactly, differs from the recomputation by
//! a single factor `±2^s` (harmless once 2 is inverted), or disagrees.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::numeric::{factorial, p_valuation};
use crate::samelson::{generator_matrix, row_basis, samelson_order, ProductProblem, RowIndex};
use crate::{Integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    Lemma2_3,
    Lemma2_7,
    Lemma2_10i,
    Lemma2_10ii,
    Lemma3_3,
    Lemma3_5,
    Lemma3_8Alpha,
    Lemma3_8Beta,
}

impl TableId {
    pub const ALL: [TableId; 8] = [
        TableId::Lemma2_3,
        TableId::Lemma2_7,
        TableId::Lemma2_10i,
        TableId::Lemma2_10ii,
        TableId::Lemma3_3,
        TableId::Lemma3_5,
        TableId::Lemma3_8Alpha,
        TableId::Lemma3_8Beta,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            TableId::Lemma2_3 => "Lemma 2.3",
            TableId::Lemma2_7 => "Lemma 2.7",
            TableId::Lemma2_10i => "Lemma 2.10i",
            TableId::Lemma2_10ii => "Lemma 2.10ii",
            TableId::Lemma3_3 => "Lemma 3.3",
            TableId::Lemma3_5 => "Lemma 3.5",
            TableId::Lemma3_8Alpha => "Lemma 3.8-alpha",
            TableId::Lemma3_8Beta => "Lemma 3.8-beta",
        }
    }

    fn symbol(&self) -> char {
        match self {
            TableId::Lemma3_8Beta => 'β',
            _ => 'α',
        }
    }

    /// The `a = 1` tables index their generators by `j` alone.
    fn single_index(&self) -> bool {
        matches!(self, TableId::Lemma2_10i | TableId::Lemma2_10ii)
    }

    /// Name of the generator `ζ₁⊗x^i⊗x^j` as printed.
    pub fn column_label(&self, (i, j): (u32, u32)) -> String {
        if self.single_index() {
            format!("{}_{j}", self.symbol())
        } else {
            format!("{}_{{{i},{j}}}", self.symbol())
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTable {
    pub id: TableId,
    pub problem: ProductProblem,
    /// Printed generators in printed order, keyed by `(i, j)`.
    pub columns: Vec<((u32, u32), Vec<Rational>)>,
    /// Transcription remarks (e.g. a misprinted component count).
    pub remarks: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Classification of one printed column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ColumnStatus {
    MatchExact,
    /// Recomputed column `= sign · 2^exponent ·` printed column.
    Match2Local {
        sign: Sign,
        exponent: i64,
    },
    /// Rows where printed and recomputed entries differ.
    Mismatch {
        rows: Vec<RowIndex>,
    },
}

impl ColumnStatus {
    pub fn kind(&self) -> &'static str {
        match self {
            ColumnStatus::MatchExact => "MATCH_EXACT",
            ColumnStatus::Match2Local { .. } => "MATCH_2LOCAL",
            ColumnStatus::Mismatch { .. } => "MISMATCH",
        }
    }
}

impl fmt::Display for ColumnStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnStatus::MatchExact => f.write_str("MATCH_EXACT"),
            ColumnStatus::Match2Local { sign, exponent } => {
                write!(f, "MATCH_2LOCAL({sign},{exponent})")
            }
            ColumnStatus::Mismatch { rows } => {
                let rows: Vec<String> = rows.iter().map(ToString::to_string).collect();
                write!(f, "MISMATCH rows {}", rows.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnComparison {
    pub column: (u32, u32),
    pub label: String,
    pub printed: Vec<Rational>,
    pub recomputed: Vec<Integer>,
    pub status: ColumnStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub id: TableId,
    pub problem: ProductProblem,
    pub columns: Vec<ColumnComparison>,
    /// Findings and transcription remarks, one sentence each.
    pub notes: Vec<String>,
}

impl ComparisonReport {
    pub fn count(&self, kind: &str) -> usize {
        self.columns
            .iter()
            .filter(|c| c.status.kind() == kind)
            .count()
    }

    pub fn status_of(&self, column: (u32, u32)) -> Option<&ColumnStatus> {
        self.columns
            .iter()
            .find(|c| c.column == column)
            .map(|c| &c.status)
    }

    /// `Lemma 2.3: 4/4 MATCH_EXACT`, listing only the kinds that occur.
    pub fn summary(&self) -> String {
        let total = self.columns.len();
        let parts: Vec<String> = ["MATCH_EXACT", "MATCH_2LOCAL", "MISMATCH"]
            .iter()
            .filter_map(|kind| {
                let n = self.count(kind);
                (n > 0).then(|| format!("{n}/{total} {kind}"))
            })
            .collect();
        format!("{}: {}", self.id, parts.join(", "))
    }
}

/// Classifies a printed column against its recomputation, row by row.
///
/// # Panics
/// If the three slices have different lengths.
pub fn classify_column(
    printed: &[Rational],
    recomputed: &[Integer],
    rows: &[RowIndex],
) -> ColumnStatus {
    assert_eq!(printed.len(), recomputed.len(), "column lengths differ");
    assert_eq!(
        printed.len(),
        rows.len(),
        "column length differs from row basis"
    );
    let recomputed: Vec<Rational> = recomputed
        .iter()
        .cloned()
        .map(Rational::from_integer)
        .collect();
    let differing: Vec<RowIndex> = rows
        .iter()
        .zip(printed.iter().zip(&recomputed))
        .filter(|(_, (p, r))| p != r)
        .map(|(row, _)| *row)
        .collect();
    if differing.is_empty() {
        return ColumnStatus::MatchExact;
    }
    let mismatch = ColumnStatus::Mismatch { rows: differing };

    let mut ratio: Option<Rational> = None;
    for (p, r) in printed.iter().zip(&recomputed) {
        if p.is_zero() != r.is_zero() {
            return mismatch;
        }
        if p.is_zero() {
            continue;
        }
        let this = r / p;
        match &ratio {
            None => ratio = Some(this),
            Some(prev) if *prev == this => {}
            Some(_) => return mismatch,
        }
    }
    let Some(ratio) = ratio else { return mismatch };
    match signed_power_of_two(&ratio) {
        Some((sign, exponent)) => ColumnStatus::Match2Local { sign, exponent },
        None => mismatch,
    }
}

/// `Some((sign, s))` when `x = sign · 2^s`.
fn signed_power_of_two(x: &Rational) -> Option<(Sign, i64)> {
    let sign = if x.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    let numer = x.numer().abs();
    let denom = x.denom().clone();
    let two = Integer::from(2);
    let log2 = |v: &Integer| -> Option<i64> {
        if v.is_one() {
            return Some(0);
        }
        let e = p_valuation(&two, v).ok()?;
        (Integer::one() << e as usize == *v).then_some(i64::from(e))
    };
    if denom.is_one() {
        log2(&numer).map(|e| (sign, e))
    } else if numer.is_one() {
        log2(&denom).map(|e| (sign, -e))
    } else {
        None
    }
}

/// Audits one printed table against the generator matrix of its problem.
pub fn compare(table: &PaperTable) -> ComparisonReport {
    let gm = generator_matrix(&table.problem);
    let columns = table
        .columns
        .iter()
        .map(|((i, j), printed)| {
            let recomputed = gm
                .column_for(*i, *j)
                .unwrap_or_else(|| panic!("{}: no generator ({i},{j})", table.id));
            ColumnComparison {
                column: (*i, *j),
                label: table.id.column_label((*i, *j)),
                status: classify_column(printed, &recomputed, &gm.row_basis),
                printed: printed.clone(),
                recomputed,
            }
        })
        .collect();
    let mut notes = table.remarks.clone();
    notes.extend(findings(table));
    ComparisonReport {
        id: table.id,
        problem: table.problem,
        columns,
        notes,
    }
}

/// Checks stated relations among printed generators.
fn findings(table: &PaperTable) -> Vec<String> {
    if table.id != TableId::Lemma2_7 {
        return Vec::new();
    }
    // (3α_{1,1} − α_{1,2}) + (α_{2,2} − α_{2,1}) + (α_{1,3} − α_{2,3}) is claimed to be 15·(1,1,1).
    let terms: [((u32, u32), i64); 6] = [
        ((1, 1), 3),
        ((1, 2), -1),
        ((2, 2), 1),
        ((2, 1), -1),
        ((1, 3), 1),
        ((2, 3), -1),
    ];
    let len = row_basis(&table.problem).len();
    let mut sum = vec![Rational::zero(); len];
    for (col, coeff) in terms {
        let printed = table
            .columns
            .iter()
            .find(|(c, _)| *c == col)
            .map(|(_, v)| v)
            .expect("Lemma 2.7 fixture has all six generators");
        for (s, x) in sum.iter_mut().zip(printed) {
            *s += x * Rational::from_integer(coeff.into());
        }
    }
    let rendered: Vec<String> = sum.iter().map(ToString::to_string).collect();
    let holds = sum.iter().all(|x| *x == Rational::from_integer(15.into()));
    let order = samelson_order(&table.problem)
        .map(|r| r.d_odd.to_string())
        .unwrap_or_else(|e| e.to_string());
    vec![format!(
        "the combination (3α_{{1,1}}−α_{{1,2}})+(α_{{2,2}}−α_{{2,1}})+(α_{{1,3}}−α_{{2,3}}) of the printed vectors is ({}), which {} 5·3(1, 1, 1); the recomputed matrix gives odd order {}",
        rendered.join(", "),
        if holds { "equals" } else { "is not" },
        order,
    )]
}

/// A stated odd-primary order for one product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremClaim {
    pub problem: ProductProblem,
    pub stated_odd_order: u64,
}

/// Stated orders for theorem `1` (`a + b = n`) or `2` (`a + b = n + k`, `k ≥ 1`).
pub fn theorem_claims(theorem: u32) -> Option<Vec<TheoremClaim>> {
    let rows: &[(u32, u32, u32, u64)] = match theorem {
        1 => &[(1, 2, 3, 3), (1, 3, 4, 15), (2, 2, 4, 15), (2, 3, 5, 15)],
        2 => &[
            (2, 2, 3, 15),
            (2, 3, 4, 45),
            (3, 3, 5, 315),
            (3, 3, 4, 315),
            (2, 4, 5, 1575),
            (3, 4, 6, 1575),
            (4, 4, 7, 70875),
            (4, 4, 5, 70875),
        ],
        _ => return None,
    };
    Some(
        rows.iter()
            .map(|&(a, b, n, stated_odd_order)| TheoremClaim {
                problem: ProductProblem::new(a, b, n).expect("claimed problems are valid"),
                stated_odd_order,
            })
            .collect(),
    )
}

/// `num/den · k!`, the shape of every printed entry.
fn e(num: i64, den: i64, k: u32) -> Rational {
    Rational::new(
        Integer::from(num) * factorial::<Integer>(k),
        Integer::from(den),
    )
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn z() -> Rational {
    Rational::zero()
}

fn table(
    id: TableId,
    (a, b, n): (u32, u32, u32),
    columns: Vec<((u32, u32), Vec<Rational>)>,
) -> PaperTable {
    PaperTable {
        id,
        problem: ProductProblem::new(a, b, n).expect("fixture problems are valid"),
        columns,
        remarks: Vec::new(),
    }
}

/// All eight printed generator tables.
pub fn fixtures() -> Vec<PaperTable> {
    vec![
        table(
            TableId::Lemma2_3,
            (2, 2, 4),
            vec![
                ((1, 1), vec![e(1, 2, 4), e(1, 2, 4), e(1, 4, 5)]),
                ((1, 2), vec![e(1, 1, 4), z(), e(1, 2, 5)]),
                ((2, 1), vec![z(), e(1, 1, 4), e(1, 2, 5)]),
                ((2, 2), vec![z(), z(), e(1, 1, 5)]),
            ],
        ),
        table(
            TableId::Lemma2_7,
            (2, 3, 5),
            vec![
                ((1, 1), vec![e(1, 6, 5), e(1, 4, 5), e(1, 12, 6)]),
                ((1, 2), vec![e(1, 2, 5), e(1, 2, 5), e(1, 4, 6)]),
                ((1, 3), vec![e(2, 1, 5), z(), e(1, 1, 6)]),
                ((2, 1), vec![z(), e(1, 2, 5), e(1, 6, 6)]),
                ((2, 2), vec![z(), e(1, 1, 5), e(1, 2, 6)]),
                ((2, 3), vec![z(), z(), e(2, 1, 6)]),
            ],
        ),
        table(
            TableId::Lemma2_10i,
            (1, 2, 3),
            vec![
                ((1, 1), vec![e(1, 1, 3), e(1, 2, 4)]),
                ((1, 2), vec![z(), e(1, 1, 4)]),
            ],
        ),
        // Printed after inverting 2.
        table(
            TableId::Lemma2_10ii,
            (1, 3, 4),
            vec![
                ((1, 1), vec![int(3), int(5)]),
                ((1, 2), vec![int(3), int(15)]),
                ((1, 3), vec![z(), int(15)]),
            ],
        ),
        table(
            TableId::Lemma3_3,
            (2, 2, 3),
            vec![
                ((1, 1), vec![e(1, 1, 3), e(1, 2, 4), e(1, 2, 4), e(1, 4, 5)]),
                ((1, 2), vec![z(), e(1, 1, 4), z(), e(1, 2, 5)]),
                ((2, 1), vec![z(), z(), e(1, 1, 4), e(1, 2, 5)]),
                ((2, 2), vec![z(), z(), z(), e(1, 1, 5)]),
            ],
        ),
        table(
            TableId::Lemma3_5,
            (2, 3, 4),
            vec![
                (
                    (1, 1),
                    vec![e(1, 2, 4), e(1, 6, 5), e(1, 2, 4), e(1, 4, 5), e(1, 12, 6)],
                ),
                (
                    (1, 2),
                    vec![e(1, 1, 4), e(1, 2, 5), z(), e(1, 2, 5), e(1, 4, 6)],
                ),
                ((1, 3), vec![z(), e(2, 1, 5), z(), z(), e(1, 1, 6)]),
                ((2, 1), vec![z(), z(), e(1, 1, 4), e(1, 2, 5), e(1, 6, 6)]),
                ((2, 2), vec![z(), z(), z(), e(1, 1, 5), e(1, 2, 6)]),
                ((2, 3), vec![z(), z(), z(), z(), e(2, 1, 6)]),
            ],
        ),
        table(
            TableId::Lemma3_8Alpha,
            (3, 3, 4),
            vec![
                (
                    (1, 1),
                    vec![
                        e(1, 2, 4),
                        e(1, 6, 5),
                        e(1, 2, 4),
                        e(1, 4, 5),
                        e(1, 12, 6),
                        e(1, 6, 5),
                        e(1, 12, 6),
                        e(1, 36, 7),
                    ],
                ),
                (
                    (1, 2),
                    vec![
                        e(1, 1, 4),
                        e(1, 2, 5),
                        z(),
                        e(1, 2, 5),
                        e(1, 4, 6),
                        z(),
                        e(1, 6, 6),
                        e(1, 12, 7),
                    ],
                ),
                (
                    (1, 3),
                    vec![z(), e(2, 1, 5), z(), z(), e(1, 1, 6), z(), z(), e(1, 3, 7)],
                ),
                (
                    (2, 1),
                    vec![
                        z(),
                        e(1, 1, 4),
                        e(1, 2, 5),
                        z(),
                        e(1, 6, 6),
                        e(1, 2, 5),
                        e(1, 4, 6),
                        e(1, 12, 7),
                    ],
                ),
                (
                    (2, 2),
                    vec![
                        z(),
                        z(),
                        z(),
                        e(1, 1, 5),
                        e(1, 2, 6),
                        z(),
                        e(1, 2, 6),
                        e(1, 4, 7),
                    ],
                ),
                (
                    (2, 3),
                    vec![z(), z(), z(), z(), e(2, 1, 6), z(), z(), e(1, 1, 7)],
                ),
                (
                    (3, 1),
                    vec![z(), z(), z(), z(), z(), e(2, 1, 5), e(1, 1, 6), e(1, 3, 7)],
                ),
                (
                    (3, 2),
                    vec![z(), z(), z(), z(), z(), z(), e(2, 1, 6), e(1, 1, 7)],
                ),
                ((3, 3), vec![z(), z(), z(), z(), z(), z(), z(), e(4, 1, 7)]),
            ],
        ),
        lemma_3_8_beta(),
    ]
}

fn lemma_3_8_beta() -> PaperTable {
    let mut t = table(
        TableId::Lemma3_8Beta,
        (4, 4, 5),
        vec![
            (
                (1, 1),
                vec![
                    e(1, 6, 5),
                    e(1, 24, 6),
                    e(1, 4, 5),
                    e(1, 12, 6),
                    e(1, 48, 7),
                    e(1, 6, 5),
                    e(1, 12, 6),
                    e(1, 36, 7),
                    e(1, 144, 8),
                    e(1, 24, 6),
                    e(1, 48, 7),
                    e(1, 144, 8),
                    e(1, 576, 9),
                ],
            ),
            (
                (1, 2),
                vec![
                    e(1, 2, 5),
                    e(5, 12, 6),
                    e(1, 2, 5),
                    e(1, 4, 6),
                    e(5, 24, 7),
                    z(),
                    e(1, 6, 6),
                    e(1, 12, 7),
                    e(5, 72, 8),
                    z(),
                    e(1, 24, 7),
                    e(1, 48, 8),
                    e(5, 288, 9),
                ],
            ),
            (
                (1, 3),
                vec![
                    e(2, 1, 5),
                    e(3, 2, 6),
                    z(),
                    e(1, 1, 6),
                    e(3, 4, 7),
                    z(),
                    z(),
                    e(2, 6, 7),
                    e(3, 12, 8),
                    z(),
                    z(),
                    e(2, 24, 8),
                    e(3, 48, 9),
                ],
            ),
            (
                (1, 4),
                vec![
                    z(),
                    e(5, 1, 6),
                    z(),
                    z(),
                    e(5, 2, 7),
                    z(),
                    z(),
                    z(),
                    e(5, 6, 8),
                    z(),
                    z(),
                    z(),
                    e(5, 24, 9),
                ],
            ),
            (
                (2, 1),
                vec![
                    z(),
                    z(),
                    e(1, 2, 5),
                    e(1, 6, 6),
                    e(1, 24, 7),
                    e(1, 2, 5),
                    e(1, 4, 6),
                    e(1, 12, 7),
                    e(1, 48, 8),
                    e(5, 12, 6),
                    e(5, 24, 7),
                    e(5, 72, 8),
                    e(5, 288, 9),
                ],
            ),
            (
                (2, 2),
                vec![
                    z(),
                    z(),
                    e(1, 1, 5),
                    e(1, 2, 6),
                    e(5, 12, 7),
                    z(),
                    e(1, 2, 6),
                    e(1, 4, 7),
                    e(5, 24, 8),
                    z(),
                    e(5, 12, 7),
                    e(5, 24, 8),
                    e(25, 144, 9),
                ],
            ),
            (
                (2, 3),
                vec![
                    z(),
                    z(),
                    z(),
                    e(2, 1, 6),
                    e(3, 2, 7),
                    z(),
                    z(),
                    e(1, 1, 7),
                    e(3, 4, 8),
                    z(),
                    z(),
                    e(10, 12, 8),
                    e(15, 24, 9),
                ],
            ),
            (
                (2, 4),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    e(5, 1, 7),
                    z(),
                    z(),
                    z(),
                    e(5, 2, 8),
                    z(),
                    z(),
                    z(),
                    e(25, 12, 9),
                ],
            ),
            (
                (3, 1),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(2, 1, 5),
                    e(1, 1, 6),
                    e(2, 6, 7),
                    e(2, 24, 8),
                    e(3, 2, 6),
                    e(3, 4, 7),
                    e(3, 12, 8),
                    e(3, 48, 9),
                ],
            ),
            (
                (3, 2),
                // Printed with fourteen components; one of the seven leading
                // zeros is dropped.
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(2, 1, 6),
                    e(1, 1, 7),
                    e(5, 6, 8),
                    z(),
                    e(3, 2, 7),
                    e(3, 4, 8),
                    e(15, 24, 9),
                ],
            ),
            (
                (3, 3),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(4, 1, 7),
                    e(3, 1, 8),
                    z(),
                    z(),
                    e(3, 1, 8),
                    e(9, 4, 9),
                ],
            ),
            (
                (3, 4),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(10, 1, 8),
                    z(),
                    z(),
                    z(),
                    e(15, 2, 9),
                ],
            ),
            (
                (4, 1),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(5, 1, 6),
                    e(5, 2, 7),
                    e(5, 6, 8),
                    e(5, 24, 9),
                ],
            ),
            (
                (4, 2),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(5, 1, 7),
                    e(5, 2, 8),
                    e(25, 12, 9),
                ],
            ),
            (
                (4, 3),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(10, 1, 8),
                    e(15, 2, 9),
                ],
            ),
            (
                (4, 4),
                vec![
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    z(),
                    e(25, 1, 9),
                ],
            ),
        ],
    );
    t.remarks.push(
        "β_{3,2} is printed with 14 components against a 13-element basis; one leading zero was dropped in transcription"
            .to_string(),
    );
    t
}
