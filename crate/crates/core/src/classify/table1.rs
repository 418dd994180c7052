//! The classical rows of the summary table, in the table's own `(p, q)`
//! convention, mapped onto catalog descriptors.

use serde::Serialize;

use super::closed::closed_form;
use crate::error::Result;
use crate::liealg::{Family, RepDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Table1Row {
    /// `SU_{2p+q}/S(U_{2p} x U_q)`
    Su,
    /// `SO_{4p+q}/SO_{4p} x SO_q`
    So,
    /// `Sp_{p+q}/Sp_p x Sp_q`
    Sp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub row: Table1Row,
    pub p: usize,
    pub q: usize,
    /// `G/K` with the parameters substituted.
    pub space: String,
    pub descriptor: String,
    /// Value stated by the table's condition column.
    pub stated: usize,
    pub condition: String,
    /// Closed-form count for the mapped descriptor.
    pub closed: usize,
}

impl Table1Entry {
    pub fn agrees(&self) -> bool {
        self.stated == self.closed
    }
}

/// Catalog family for a table row, or `None` when the row has rank below two.
pub fn reparametrize(row: Table1Row, p: usize, q: usize) -> Option<Family> {
    if p == 0 {
        return None;
    }
    match row {
        Table1Row::Su => (q >= 2).then_some(Family::AIII { p: 2 * p, q }),
        Table1Row::So => match q {
            0 | 1 => None,
            2 if p == 1 => Some(Family::AIII { p: 2, q: 2 }),
            2 => Some(Family::DI { p: 1, q: 2 * p }),
            _ if q.is_multiple_of(2) => Some(Family::DI { p: 2 * p, q: q / 2 }),
            _ => Some(Family::BI { p: 2 * p, q: (q - 1) / 2 }),
        },
        Table1Row::Sp => (p >= 2 && q >= 2).then_some(Family::CII { p, q }),
    }
}

/// Inverse of [`reparametrize`] on its image.
pub fn table_params(family: Family) -> Option<(Table1Row, usize, usize)> {
    match family {
        Family::AIII { p, q } if p % 2 == 0 => Some((Table1Row::Su, p / 2, q)),
        Family::DI { p: 1, q } if q % 2 == 0 && q >= 4 => Some((Table1Row::So, q / 2, 2)),
        Family::DI { p, q } if p % 2 == 0 => Some((Table1Row::So, p / 2, 2 * q)),
        Family::BI { p, q } if p % 2 == 0 && q >= 1 => Some((Table1Row::So, p / 2, 2 * q + 1)),
        Family::CII { p, q } => Some((Table1Row::Sp, p, q)),
        _ => None,
    }
}

fn stated(row: Table1Row, p: usize, q: usize) -> (usize, &'static str) {
    match row {
        Table1Row::Su if q.is_multiple_of(2) && q != 2 * p => (2, "q even and q != 2p"),
        Table1Row::Su => (1, "q odd or q = 2p"),
        Table1Row::So if q.is_multiple_of(4) && q != 4 * p => (2, "q = 0 mod 4 and q != 4p"),
        Table1Row::So => (1, "q != 0 mod 4 or q = 4p"),
        Table1Row::Sp if p != q => (2, "p != q"),
        Table1Row::Sp => (1, "p = q"),
    }
}

fn space(row: Table1Row, p: usize, q: usize) -> String {
    match row {
        Table1Row::Su => format!("SU({})/S(U({})xU({}))", 2 * p + q, 2 * p, q),
        Table1Row::So => format!("SO({})/SO({})xSO({})", 4 * p + q, 4 * p, q),
        Table1Row::Sp => format!("Sp({})/Sp({})xSp({})", p + q, p, q),
    }
}

pub fn table1_entry(row: Table1Row, p: usize, q: usize) -> Result<Option<Table1Entry>> {
    let Some(family) = reparametrize(row, p, q) else { return Ok(None) };
    let rep = RepDescriptor::new(family)?;
    let (value, condition) = stated(row, p, q);
    Ok(Some(Table1Entry {
        row,
        p,
        q,
        space: space(row, p, q),
        descriptor: family.to_string(),
        stated: value,
        condition: condition.into(),
        closed: closed_form(&rep)?.n_s,
    }))
}

/// All classical rows with `1 <= p <= max_p`, `1 <= q <= max_q` and rank
/// at least two, in row order.
pub fn table1(max_p: usize, max_q: usize) -> Result<Vec<Table1Entry>> {
    let mut out = Vec::new();
    for row in [Table1Row::Su, Table1Row::So, Table1Row::Sp] {
        for p in 1..=max_p {
            for q in 1..=max_q {
                out.extend(table1_entry(row, p, q)?);
            }
        }
    }
    Ok(out)
}

/// Exceptional rows of the table as `(G/K, descriptor, value)`.
pub const EXCEPTIONAL_ROWS: [(&str, &str, usize); 7] = [
    ("E6/SU(6)SU(2)", "EII", 1),
    ("E6/Spin(10)U(1)", "EIII", 1),
    ("E7/Spin(12)Sp(1)", "EVI", 2),
    ("E8/Spin(16)", "EVIII", 1),
    ("E8/E7SU(2)", "EIX", 1),
    ("F4/Sp(3)SU(2)", "FI", 1),
    ("G2/SU(2)SU(2)", "G", 1),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_rows_match_closed_forms() {
        let t = table1(6, 10).unwrap();
        assert!(t.len() > 150);
        for e in &t {
            assert!(e.agrees(), "{e:?}");
        }
    }

    #[test]
    fn reparametrization_round_trips() {
        for row in [Table1Row::Su, Table1Row::So, Table1Row::Sp] {
            for p in 1..=6 {
                for q in 1..=10 {
                    if let Some(f) = reparametrize(row, p, q) {
                        if row == Table1Row::So && (p, q) == (1, 2) {
                            continue;
                        }
                        assert_eq!(table_params(f), Some((row, p, q)), "{f}");
                    }
                }
            }
        }
        // And from the catalog side.
        for s in ["AIII(4,3)", "DI(4,2)", "DI(1,6)", "BI(2,3)", "CII(3,2)"] {
            let f: Family = s.parse().unwrap();
            let (row, p, q) = table_params(f).unwrap();
            assert_eq!(reparametrize(row, p, q), Some(f));
        }
    }

    #[test]
    fn dimensions_agree_with_row_formula() {
        // dim G/K of the row space equals the isotropy module dimension.
        for e in table1(4, 8).unwrap() {
            let (p, q) = (e.p, e.q);
            let dim = match e.row {
                Table1Row::Su => 2 * (2 * p) * q,
                Table1Row::So => 4 * p * q,
                Table1Row::Sp => 4 * p * q,
            };
            assert_eq!(RepDescriptor::parse(&e.descriptor).unwrap().dim, dim, "{}", e.space);
        }
    }

    #[test]
    fn exceptional_rows_match_closed_forms() {
        for (_, d, v) in EXCEPTIONAL_ROWS {
            assert_eq!(closed_form(&RepDescriptor::parse(d).unwrap()).unwrap().n_s, v, "{d}");
        }
    }
}
