//! Weight combinatorics of `S(2,d)` in characteristic 2 (and at `l = 2`):
//! decomposition numbers through the Frobenius-twist recursion, projective
//! columns by reciprocity, tilting multiplicities and twisted filtrations.
//!
//! Weights are `m = λ1 - λ2`; for degree `d` the admissible ones satisfy
//! `0 <= m <= d` and `m ≡ d (mod 2)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub usize);

impl Weight {
    pub fn value(self) -> usize {
        self.0
    }

    pub fn is_admissible(self, d: usize) -> bool {
        self.0 <= d && self.0 % 2 == d % 2
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type WeightSet = BTreeSet<Weight>;

type Memo = Mutex<HashMap<usize, Arc<WeightSet>>>;

fn memo(cell: &'static OnceLock<Memo>) -> &'static Memo {
    cell.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(
    cell: &'static OnceLock<Memo>,
    m: usize,
    compute: impl FnOnce() -> Result<WeightSet>,
) -> Result<Arc<WeightSet>> {
    if let Some(hit) = memo(cell).lock().expect("memo lock").get(&m) {
        return Ok(hit.clone());
    }
    let value = Arc::new(compute()?);
    memo(cell).lock().expect("memo lock").insert(m, value.clone());
    Ok(value)
}

fn scaled(set: Arc<WeightSet>, factor: usize, offset: usize) -> Vec<Weight> {
    set.iter().map(|w| Weight(factor * w.0 + offset)).collect()
}

/// `{ n : (Δ(m) : L(n)) = 1 }`.
///
/// Even `m = 2t` combines the twisted rows of `t` and `t - 1`; odd
/// `m = 2t + 1` shifts the twisted row of `t` by one.
pub fn decomp_row(m: Weight) -> Result<Arc<WeightSet>> {
    static ROWS: OnceLock<Memo> = OnceLock::new();
    cached(&ROWS, m.0, || match m.0 {
        0 | 1 => Ok(BTreeSet::from([m])),
        x if x % 2 == 0 => {
            let t = x / 2;
            let mut row: WeightSet = scaled(decomp_row(Weight(t))?, 2, 0).into_iter().collect();
            for n in scaled(decomp_row(Weight(t - 1))?, 2, 0) {
                if !row.insert(n) {
                    return Err(Error::Construction(format!(
                        "decomposition number (Δ({x}):L({n})) exceeds 1"
                    )));
                }
            }
            Ok(row)
        }
        x => Ok(scaled(decomp_row(Weight(x / 2))?, 2, 1).into_iter().collect()),
    })
}

fn require_even_degree(d: usize) -> Result<()> {
    if !d.is_multiple_of(2) {
        return Err(Error::Usage(format!(
            "degree {d} is odd; only even degrees are tabulated"
        )));
    }
    Ok(())
}

fn require_admissible(d: usize, m: Weight) -> Result<()> {
    if !m.is_admissible(d) {
        return Err(Error::Usage(format!("weight {m} is not admissible for degree {d}")));
    }
    Ok(())
}

/// `{ w <= d : [P_d(m) : Δ(w)] = 1 }`, the column of `m` cut off at `d`.
pub fn projective_column(d: usize, m: Weight) -> Result<WeightSet> {
    require_even_degree(d)?;
    require_admissible(d, m)?;
    let mut column = BTreeSet::new();
    for w in (m.0..=d).step_by(2) {
        if decomp_row(Weight(w))?.contains(&m) {
            column.insert(Weight(w));
        }
    }
    Ok(column)
}

/// `{ w : [T(m) : Δ(w)] = 1 }`.
pub fn tilting_delta_mults(m: Weight) -> Result<Arc<WeightSet>> {
    static TILTING: OnceLock<Memo> = OnceLock::new();
    cached(&TILTING, m.0, || match m.0 {
        0 | 1 => Ok(BTreeSet::from([m])),
        2 => Ok(BTreeSet::from([Weight(0), Weight(2)])),
        x if x % 2 == 0 => {
            let mut counts: BTreeMap<Weight, usize> = BTreeMap::new();
            for t in tilting_delta_mults(Weight(x / 2 - 1))?.iter() {
                for w in [Weight(2 * t.0), Weight(2 * t.0 + 2)] {
                    *counts.entry(w).or_default() += 1;
                }
            }
            if let Some((w, c)) = counts.iter().find(|(_, &c)| c > 1) {
                return Err(Error::Construction(format!(
                    "[T({x}):Δ({w})] = {c} exceeds 1"
                )));
            }
            Ok(counts.into_keys().collect())
        }
        x => Ok(scaled(tilting_delta_mults(Weight(x / 2))?, 2, 1).into_iter().collect()),
    })
}

/// The pairs `(2 s_i, 2 s_i + 2)` of the twisted filtration of `T(m)`,
/// with `s_1 < s_2 < ...` the Δ-weights of `T(m/2 - 1)`.
pub fn twisted_filtration(m: Weight) -> Result<Vec<(Weight, Weight)>> {
    if m.0 < 2 || !m.0.is_multiple_of(2) {
        return Err(Error::Usage(format!(
            "twisted filtrations need an even weight >= 2, got {m}"
        )));
    }
    Ok(tilting_delta_mults(Weight(m.0 / 2 - 1))?
        .iter()
        .map(|s| (Weight(2 * s.0), Weight(2 * s.0 + 2)))
        .collect())
}

/// The 0/1 decomposition matrix of `S(2,d)` for even `d`, rows and columns
/// indexed by the even weights `0, 2, ..., d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompTable {
    degree: usize,
    entries: Vec<Vec<bool>>,
}

/// JSON shape of a [`DecompTable`]: entries are `"1"` or `"."`.
#[derive(Serialize, Deserialize)]
struct DecompTableJson {
    degree: usize,
    weights: Vec<usize>,
    rows: Vec<Vec<String>>,
}

pub fn decomposition_matrix(d: usize) -> Result<DecompTable> {
    require_even_degree(d)?;
    let weights: Vec<usize> = (0..=d).step_by(2).collect();
    let entries = weights
        .iter()
        .map(|&m| {
            let row = decomp_row(Weight(m))?;
            Ok(weights.iter().map(|&n| row.contains(&Weight(n))).collect())
        })
        .collect::<Result<_>>()?;
    Ok(DecompTable { degree: d, entries })
}

impl DecompTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weights(&self) -> Vec<Weight> {
        (0..=self.degree).step_by(2).map(Weight).collect()
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `(Δ(m) : L(n))` as 0 or 1.
    pub fn entry(&self, m: Weight, n: Weight) -> Result<u8> {
        require_admissible(self.degree, m)?;
        require_admissible(self.degree, n)?;
        Ok(u8::from(self.entries[m.0 / 2][n.0 / 2]))
    }

    pub fn row(&self, m: Weight) -> Result<WeightSet> {
        require_admissible(self.degree, m)?;
        Ok(self.weights().into_iter().filter(|n| self.entries[m.0 / 2][n.0 / 2]).collect())
    }

    pub fn column(&self, n: Weight) -> Result<WeightSet> {
        require_admissible(self.degree, n)?;
        Ok(self.weights().into_iter().filter(|m| self.entries[m.0 / 2][n.0 / 2]).collect())
    }

    /// Header `m,0,2,...,d`, then one row per weight with 1/0 entries.
    pub fn to_csv(&self) -> String {
        let weights = self.weights();
        let mut out = String::from("m");
        for w in &weights {
            out.push_str(&format!(",{w}"));
        }
        out.push('\n');
        for (m, row) in weights.iter().zip(&self.entries) {
            out.push_str(&m.to_string());
            for &x in row {
                out.push_str(if x { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("decomposition table CSV: {msg}"));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty input".into()))?.split(',').collect();
        if header.first().map(|s| s.trim()) != Some("m") {
            return Err(bad("header must start with m".into()));
        }
        let weights: Vec<usize> = header[1..]
            .iter()
            .map(|s| s.trim().parse().map_err(|_| bad(format!("bad weight {s:?}"))))
            .collect::<Result<_>>()?;
        let degree = *weights.last().ok_or_else(|| bad("no columns".into()))?;
        if weights != (0..=degree).step_by(2).collect::<Vec<_>>() {
            return Err(bad("columns must be 0, 2, ..., d".into()));
        }
        let mut entries = Vec::new();
        for (k, line) in lines.enumerate() {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() != weights.len() + 1 || cells[0] != weights.get(k).map_or(String::new(), |w| w.to_string()) {
                return Err(bad(format!("malformed row {line:?}")));
            }
            let row = cells[1..]
                .iter()
                .map(|c| match *c {
                    "1" => Ok(true),
                    "0" => Ok(false),
                    other => Err(bad(format!("entry {other:?} is not 0 or 1"))),
                })
                .collect::<Result<Vec<bool>>>()?;
            entries.push(row);
        }
        if entries.len() != weights.len() {
            return Err(bad(format!("{} rows for {} columns", entries.len(), weights.len())));
        }
        Ok(DecompTable { degree, entries })
    }

    pub fn to_json(&self) -> String {
        let json = DecompTableJson {
            degree: self.degree,
            weights: self.weights().iter().map(|w| w.0).collect(),
            rows: self
                .entries
                .iter()
                .map(|r| r.iter().map(|&x| if x { "1" } else { "." }.to_string()).collect())
                .collect(),
        };
        serde_json::to_string(&json).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: DecompTableJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = json.degree / 2 + 1;
        if !json.degree.is_multiple_of(2) || json.weights != (0..=json.degree).step_by(2).collect::<Vec<_>>() {
            return Err(Error::Parse("weights must be 0, 2, ..., d for even d".into()));
        }
        let entries = json
            .rows
            .iter()
            .map(|r| {
                if r.len() != n {
                    return Err(Error::Parse("ragged decomposition table".into()));
                }
                r.iter()
                    .map(|c| match c.as_str() {
                        "1" => Ok(true),
                        "." => Ok(false),
                        other => Err(Error::Parse(format!("entry {other:?} is not 1 or ."))),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<bool>>>>()?;
        if entries.len() != n {
            return Err(Error::Parse("wrong number of rows".into()));
        }
        Ok(DecompTable {
            degree: json.degree,
            entries,
        })
    }

    /// Lower-triangular picture: `1` and `.` separated by spaces, the row
    /// weight in front.
    pub fn to_pretty(&self) -> String {
        let width = self.degree.to_string().len();
        let mut out = String::new();
        for (k, row) in self.entries.iter().enumerate() {
            let cells: Vec<&str> = row[..=k].iter().map(|&x| if x { "1" } else { "." }).collect();
            out.push_str(&format!("{:>width$} | {}\n", 2 * k, cells.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(ws: &[usize]) -> WeightSet {
        ws.iter().copied().map(Weight).collect()
    }

    #[test]
    fn base_rows() {
        assert_eq!(*decomp_row(Weight(0)).unwrap(), set(&[0]));
        assert_eq!(*decomp_row(Weight(1)).unwrap(), set(&[1]));
        assert_eq!(*decomp_row(Weight(6)).unwrap(), set(&[0, 4, 6]));
        assert_eq!(
            *decomp_row(Weight(46)).unwrap(),
            set(&[0, 8, 12, 14, 16, 32, 40, 44, 46])
        );
    }

    #[test]
    fn small_tables() {
        let t = decomposition_matrix(6).unwrap();
        let rows: Vec<WeightSet> = t.weights().into_iter().map(|m| t.row(m).unwrap()).collect();
        assert_eq!(rows, vec![set(&[0]), set(&[0, 2]), set(&[0, 2, 4]), set(&[0, 4, 6])]);
        let zero = decomposition_matrix(0).unwrap();
        assert_eq!(zero.size(), 1);
        assert_eq!(zero.entry(Weight(0), Weight(0)).unwrap(), 1);
        assert!(decomposition_matrix(7).is_err());
    }

    #[test]
    fn columns() {
        assert_eq!(projective_column(6, Weight(0)).unwrap(), set(&[0, 2, 4, 6]));
        assert_eq!(projective_column(10, Weight(10)).unwrap(), set(&[10]));
        assert_eq!(projective_column(28, Weight(16)).unwrap().len() % 2, 1);
        assert_eq!(projective_column(28, Weight(18)).unwrap().len() % 2, 0);
        assert!(projective_column(6, Weight(3)).is_err());
        assert!(projective_column(6, Weight(8)).is_err());
        assert!(projective_column(5, Weight(1)).is_err());
        let t = decomposition_matrix(20).unwrap();
        assert_eq!(t.column(Weight(4)).unwrap(), projective_column(20, Weight(4)).unwrap());
    }

    #[test]
    fn tilting_examples() {
        assert_eq!(*tilting_delta_mults(Weight(1)).unwrap(), set(&[1]));
        assert_eq!(*tilting_delta_mults(Weight(2)).unwrap(), set(&[0, 2]));
        assert_eq!(*tilting_delta_mults(Weight(4)).unwrap(), set(&[2, 4]));
    }

    #[test]
    fn filtrations() {
        let pairs = |ps: &[(usize, usize)]| ps.iter().map(|&(a, b)| (Weight(a), Weight(b))).collect::<Vec<_>>();
        assert_eq!(twisted_filtration(Weight(2)).unwrap(), pairs(&[(0, 2)]));
        assert_eq!(twisted_filtration(Weight(4)).unwrap(), pairs(&[(2, 4)]));
        assert_eq!(twisted_filtration(Weight(6)).unwrap(), pairs(&[(0, 2), (4, 6)]));
        assert!(twisted_filtration(Weight(0)).is_err());
        assert!(twisted_filtration(Weight(5)).is_err());
    }

    #[test]
    fn structural_checks_up_to_64() {
        for m in 0..=64 {
            let row = decomp_row(Weight(m)).unwrap();
            assert!(row.contains(&Weight(m)));
            assert_eq!(row.iter().max(), Some(&Weight(m)));
            if m % 2 == 0 {
                assert_eq!(row.iter().next(), Some(&Weight(0)));
            }
            let t = tilting_delta_mults(Weight(m)).unwrap();
            assert_eq!(t.iter().max(), Some(&Weight(m)));
        }
    }

    #[test]
    fn csv_and_json_round_trip() {
        for d in [0, 2, 10, 46] {
            let t = decomposition_matrix(d).unwrap();
            assert_eq!(DecompTable::from_csv(&t.to_csv()).unwrap(), t);
            assert_eq!(DecompTable::from_json(&t.to_json()).unwrap(), t);
        }
        assert!(DecompTable::from_csv("m,0,2\n0,1,0\n2,1,2\n").is_err());
        assert!(DecompTable::from_csv("").is_err());
    }

    #[test]
    fn pretty_table() {
        let t = decomposition_matrix(6).unwrap();
        assert_eq!(t.to_pretty().lines().last().unwrap(), "6 | 1 . 1 1");
    }

    proptest! {
        #[test]
        fn table_is_unitriangular(half in 0usize..30) {
            let t = decomposition_matrix(2 * half).unwrap();
            for m in t.weights() {
                prop_assert_eq!(t.entry(m, m).unwrap(), 1);
                for n in t.weights().into_iter().filter(|n| *n > m) {
                    prop_assert_eq!(t.entry(m, n).unwrap(), 0);
                }
            }
        }
    }
}
