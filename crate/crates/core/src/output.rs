//! Documents produced by the command line: tables, expansions, censuses
//! and trees, with text, JSON and CSV renderings.
//!
//! Coefficients are carried as decimal strings so that JSON output is exact
//! for integers of any size.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bases::{transition_inverse, transition_matrix, u_basis, v_in_ribbon, IntComb, NsymBasis, NsymElement};
use crate::composition::{compositions, compositions_ordered, Composition};
use crate::equivalences::{Census, InsertionPair, Relation};
use crate::error::{Error, Result};
use crate::fqsym::ZSeries;
use crate::matrix::IntMatrix;
use crate::qpoly::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// The six printed tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableKind {
    U,
    M,
    Minv,
    VR,
    VL,
    Z,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" => Ok(TableKind::U),
            "M" => Ok(TableKind::M),
            "Minv" => Ok(TableKind::Minv),
            "VR" => Ok(TableKind::VR),
            "VL" => Ok(TableKind::VL),
            "Z" => Ok(TableKind::Z),
            _ => Err(Error::Parse(format!("unknown table {s:?}; expected U, M, Minv, VR, VL or Z"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub index: String,
    pub coeff: String,
}

/// `name = Σ coeff · basis_index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRow {
    pub name: String,
    pub basis: String,
    pub terms: Vec<Term>,
}

/// One `(Σ G_σ) Y^I` summand of `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZTerm {
    pub exponent: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exponent: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub min: String,
    pub size: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Statistic {
        permutation: String,
        statistic: String,
        value: String,
    },
    Expansions {
        table: TableKind,
        n: usize,
        rows: Vec<ExpansionRow>,
    },
    Matrix {
        table: TableKind,
        n: usize,
        labels: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    Z {
        n: usize,
        terms: Vec<ZTerm>,
    },
    Product {
        basis: String,
        left: String,
        right: String,
        terms: Vec<Term>,
    },
    Polynomial {
        index: String,
        variant: String,
        terms: Vec<PolyTerm>,
    },
    Census {
        n: usize,
        relation: Relation,
        count: usize,
        /// Empty unless class sizes were requested.
        classes: Vec<ClassRow>,
    },
    Insertion {
        permutation: String,
        relation: Relation,
        pair: InsertionPair,
    },
}

fn terms_of(x: &IntComb, order: impl Fn(&mut Vec<(&Composition, &BigInt)>)) -> Vec<Term> {
    let mut items: Vec<(&Composition, &BigInt)> = x.iter().collect();
    order(&mut items);
    items.into_iter().map(|(k, c)| Term { index: k.compact(), coeff: c.to_string() }).collect()
}

fn lex(items: &mut Vec<(&Composition, &BigInt)>) {
    items.sort_by(|a, b| a.0.cmp(b.0));
}

fn table_order(items: &mut Vec<(&Composition, &BigInt)>) {
    items.sort_by(|a, b| a.0.table_key().cmp(&b.0.table_key()));
}

/// Rows of the expansion tables run in decreasing lexicographic order.
fn table_rows(n: usize) -> Vec<Composition> {
    let mut rows = compositions(n);
    rows.reverse();
    rows
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n > bound {
        return Err(Error::DegreeBound { degree: n, bound });
    }
    Ok(())
}

fn matrix_document(table: TableKind, n: usize, m: &IntMatrix) -> Document {
    Document::Matrix {
        table,
        n,
        labels: m.labels().iter().map(Composition::compact).collect(),
        rows: m.rows().iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect(),
    }
}

/// One of the printed tables for degree `n`.
pub fn table(kind: TableKind, n: usize, bound: usize) -> Result<Document> {
    check_bound(n, bound)?;
    match kind {
        TableKind::M => Ok(matrix_document(kind, n, transition_matrix(n)?.as_ref())),
        TableKind::Minv => Ok(matrix_document(kind, n, transition_inverse(n)?.as_ref())),
        TableKind::U => {
            let rows = table_rows(n)
                .into_iter()
                .map(|i| {
                    Ok(ExpansionRow {
                        name: format!("U_{}", i.compact()),
                        basis: "F".into(),
                        terms: terms_of(u_basis(&i)?.terms(), lex),
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Document::Expansions { table: kind, n, rows })
        }
        TableKind::VR | TableKind::VL => {
            let rows = table_rows(n)
                .into_iter()
                .map(|i| {
                    let (basis, terms) = if kind == TableKind::VR {
                        (NsymBasis::Ribbon, v_in_ribbon(&i)?)
                    } else {
                        let v = NsymElement::<BigInt>::basis_element(NsymBasis::V, i.clone());
                        (NsymBasis::Lambda, v.convert(NsymBasis::Lambda)?.into_terms())
                    };
                    Ok(ExpansionRow {
                        name: format!("V_{}", i.compact()),
                        basis: basis.symbol().into(),
                        terms: terms_of(&terms, lex),
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Document::Expansions { table: kind, n, rows })
        }
        TableKind::Z => Ok(z_document(&crate::fqsym::z_series(n))),
    }
}

/// `Z_n` with its monomials by decreasing length, then lexicographically,
/// and the `G_σ` of each coefficient in lexicographic order.
pub fn z_document(z: &ZSeries) -> Document {
    let mut keys: Vec<&Composition> = z.terms.keys().collect();
    keys.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let terms = keys
        .into_iter()
        .map(|k| ZTerm {
            exponent: k.compact(),
            terms: z.terms[k]
                .to_g()
                .terms()
                .iter()
                .map(|(s, c)| Term { index: s.to_string(), coeff: c.to_string() })
                .collect(),
        })
        .collect();
    Document::Z { n: z.degree, terms }
}

/// A product expansion, sorted in table order.
pub fn product_document(basis: NsymBasis, left: &Composition, right: &Composition, value: &IntComb) -> Document {
    Document::Product {
        basis: basis.symbol().into(),
        left: left.compact(),
        right: right.compact(),
        terms: terms_of(value, table_order),
    }
}

pub fn polynomial_document(index: &Composition, variant: &str, p: &QPoly) -> Document {
    Document::Polynomial {
        index: index.compact(),
        variant: variant.into(),
        terms: p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| *c != &BigInt::default())
            .map(|(e, c)| PolyTerm { exponent: e, coeff: c.to_string() })
            .collect(),
    }
}

pub fn census_document(census: &Census, with_sizes: bool) -> Document {
    Document::Census {
        n: census.n,
        relation: census.relation,
        count: census.count(),
        classes: if with_sizes {
            census.classes.iter().map(|c| ClassRow { min: c.min.to_string(), size: c.size.to_string() }).collect()
        } else {
            Vec::new()
        },
    }
}

/// `c F_12`, `-F_3`, `2 R_111`, joined with ` + ` and ` - `.
pub fn render_sum(symbol: &str, terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (negative, abs) = match t.coeff.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.coeff.as_str()),
        };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if abs != "1" {
            out.push_str(abs);
            out.push(' ');
        }
        let _ = write!(out, "{symbol}_{}", t.index);
    }
    out
}

fn render_monomial(exponent: &str) -> String {
    if exponent.len() == 1 {
        format!("Y_{exponent}")
    } else {
        format!("Y^{exponent}")
    }
}

fn render_poly(terms: &[PolyTerm]) -> String {
    let p = terms.iter().fold(QPoly::constant(0), |acc, t| {
        let c: BigInt = t.coeff.parse().expect("decimal coefficient");
        acc + QPoly::monomial(c, t.exponent)
    });
    p.to_string()
}

impl Document {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Json => {
                serde_json::to_string_pretty(self).map(|s| s + "\n").map_err(|e| Error::Parse(e.to_string()))
            }
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Document::Statistic { value, .. } => {
                let _ = writeln!(out, "{value}");
            }
            Document::Expansions { rows, .. } => {
                for r in rows {
                    let _ = writeln!(out, "{} = {}", r.name, render_sum(&r.basis, &r.terms));
                }
            }
            Document::Matrix { labels, rows, .. } => {
                let _ = writeln!(out, "{}", labels.join(" "));
                for r in rows {
                    let _ = writeln!(out, "{}", r.join(" "));
                }
            }
            Document::Z { n, terms } => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|t| {
                        let g = render_sum("G", &t.terms);
                        let g = if t.terms.len() > 1 { format!("({g})") } else { g };
                        format!("{g} {}", render_monomial(&t.exponent))
                    })
                    .collect();
                let _ = writeln!(out, "Z_{n} = {}", parts.join(" + "));
            }
            Document::Product { basis, terms, .. } => {
                let _ = writeln!(out, "{}", render_sum(basis, terms));
            }
            Document::Polynomial { terms, .. } => {
                let _ = writeln!(out, "{}", render_poly(terms));
            }
            Document::Census { count, classes, .. } => {
                let _ = writeln!(out, "{count}");
                for c in classes {
                    let _ = writeln!(out, "{} {}", c.min, c.size);
                }
            }
            Document::Insertion { pair, .. } => {
                let _ = writeln!(out, "P = {}", pair.p);
                let _ = writeln!(out, "Q = {}", pair.q);
            }
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut row = |fields: &[&str]| w.write_record(fields).map_err(|e| Error::Parse(e.to_string()));
        match self {
            Document::Statistic { permutation, statistic, value } => {
                row(&["permutation", "statistic", "value"])?;
                row(&[permutation, statistic, value])?;
            }
            Document::Expansions { rows, .. } => {
                row(&["element", "basis", "index", "coeff"])?;
                for r in rows {
                    for t in &r.terms {
                        row(&[&r.name, &r.basis, &t.index, &t.coeff])?;
                    }
                }
            }
            Document::Matrix { labels, rows, .. } => {
                let header: Vec<&str> = std::iter::once("").chain(labels.iter().map(String::as_str)).collect();
                row(&header)?;
                for (label, r) in labels.iter().zip(rows) {
                    let line: Vec<&str> = std::iter::once(label.as_str()).chain(r.iter().map(String::as_str)).collect();
                    row(&line)?;
                }
            }
            Document::Z { terms, .. } => {
                row(&["monomial", "permutation", "coeff"])?;
                for t in terms {
                    for g in &t.terms {
                        row(&[&t.exponent, &g.index, &g.coeff])?;
                    }
                }
            }
            Document::Product { basis, terms, .. } => {
                row(&["basis", "index", "coeff"])?;
                for t in terms {
                    row(&[basis, &t.index, &t.coeff])?;
                }
            }
            Document::Polynomial { terms, .. } => {
                row(&["exponent", "coeff"])?;
                for t in terms {
                    row(&[&t.exponent.to_string(), &t.coeff])?;
                }
            }
            Document::Census { n, relation, count, classes } => {
                if classes.is_empty() {
                    row(&["n", "relation", "classes"])?;
                    row(&[&n.to_string(), relation.name(), &count.to_string()])?;
                } else {
                    row(&["class_min", "size"])?;
                    for c in classes {
                        row(&[&c.min, &c.size])?;
                    }
                }
            }
            Document::Insertion { pair, .. } => {
                row(&["tree", "node", "parent", "partner"])?;
                for (name, tree) in [("P", &pair.p), ("Q", &pair.q)] {
                    for node in tree.labels() {
                        let partner = if name == "P" {
                            pair.correspondence.get(&node).copied()
                        } else {
                            pair.correspondence.iter().find(|(_, &q)| q == node).map(|(&p, _)| p)
                        };
                        row(&[
                            name,
                            &node.to_string(),
                            &tree.parent(node).map(|p| p.to_string()).unwrap_or_default(),
                            &partner.map(|p| p.to_string()).unwrap_or_default(),
                        ])?;
                    }
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The compositions of `n` in table order, as compact labels.
pub fn table_labels(n: usize) -> Vec<String> {
    compositions_ordered(n).iter().map(Composition::compact).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(kind: TableKind, n: usize) -> Document {
        table(kind, n, 8).unwrap()
    }

    #[test]
    fn small_tables() {
        assert_eq!(doc(TableKind::U, 2).to_text(), "U_2 = F_2\nU_11 = F_11\n");
        assert_eq!(doc(TableKind::M, 1).to_text(), "1\n1\n");
        assert_eq!(doc(TableKind::M, 3).to_text().lines().next(), Some("3 12 21 111"));
        assert_eq!(doc(TableKind::VL, 2).to_text(), "V_2 = Lambda_11 - Lambda_2\nV_11 = Lambda_2\n");
        assert_eq!(doc(TableKind::Z, 2).to_text(), "Z_2 = G_12 Y^11 + G_21 Y_2\n");
        assert_eq!(table(TableKind::U, 9, 8), Err(Error::DegreeBound { degree: 9, bound: 8 }));
    }

    #[test]
    fn sums() {
        let t = |i: &str, c: &str| Term { index: i.into(), coeff: c.into() };
        assert_eq!(render_sum("R", &[t("111", "-2"), t("21", "1"), t("3", "-1")]), "-2 R_111 + R_21 - R_3");
        assert_eq!(render_sum("R", &[]), "0");
    }

    #[test]
    fn json_round_trip() {
        for d in [doc(TableKind::U, 3), doc(TableKind::Minv, 3), doc(TableKind::Z, 3)] {
            let json = d.render(Format::Json).unwrap();
            assert_eq!(serde_json::from_str::<Document>(&json).unwrap(), d);
        }
    }

    #[test]
    fn csv_quotes_commas() {
        let d =
            Document::Statistic { permutation: "351274698".into(), statistic: "sc".into(), value: "1,3,3,2".into() };
        assert_eq!(d.to_csv().unwrap(), "permutation,statistic,value\n351274698,sc,\"1,3,3,2\"\n");
    }
}
