use serde_json::{json, Map, Value};

use crate::rootdata::{RootDatum, WeylElt};
use crate::scalars::Scalar;
use crate::Result;

/// A square table of scalars indexed `(w, v)`; zero entries are absent.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    n: usize,
    cells: Vec<Option<Scalar>>,
}

impl CoeffTable {
    pub fn new(n: usize) -> Self {
        CoeffTable { n, cells: vec![None; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: WeylElt, v: WeylElt) -> Option<&Scalar> {
        self.cells[w.index() * self.n + v.index()].as_ref()
    }

    /// The entry, zero when absent.
    pub fn value(&self, w: WeylElt, v: WeylElt) -> Scalar {
        self.get(w, v).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, w: WeylElt, v: WeylElt, x: Scalar) {
        let idx = w.index() * self.n + v.index();
        self.cells[idx] = if x.is_zero() { None } else { Some(x) };
    }

    /// Nonzero entries of column `v`, by increasing row.
    pub fn column(&self, v: WeylElt) -> impl Iterator<Item = (WeylElt, &Scalar)> + '_ {
        (0..self.n).filter_map(move |w| {
            self.cells[w * self.n + v.index()].as_ref().map(|x| (WeylElt::from_index(w), x))
        })
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (WeylElt, WeylElt, &Scalar)> + '_ {
        self.cells.iter().enumerate().filter_map(move |(k, x)| {
            x.as_ref().map(|x| (WeylElt::from_index(k / self.n), WeylElt::from_index(k % self.n), x))
        })
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<CoeffTable> {
        let mut out = CoeffTable::new(self.n);
        for (w, v, x) in self.entries() {
            out.set(w, v, f(x)?);
        }
        Ok(out)
    }

    /// `{"w|v": "scalar"}` over the nonzero entries.
    pub fn to_json(&self, datum: &RootDatum) -> Value {
        let mut map = Map::new();
        for (w, v, x) in self.entries() {
            map.insert(format!("{}|{}", datum.word_string(w), datum.word_string(v)), json!(x.to_string()));
        }
        Value::Object(map)
    }

    /// One line per nonzero entry: `name(w, v) = scalar`.
    pub fn to_text(&self, datum: &RootDatum, name: &str) -> String {
        let mut out = String::new();
        for (w, v, x) in self.entries() {
            out.push_str(&format!("{name}({}, {}) = {x}\n", datum.word_string(w), datum.word_string(v)));
        }
        out
    }

    /// A `tabular` with rows `w` and columns `v`.
    pub fn to_latex(&self, datum: &RootDatum, name: &str) -> String {
        let word = |w: WeylElt| {
            let word = datum.word(w);
            if word.is_empty() {
                "e".to_string()
            } else {
                word.iter().map(|i| format!("s_{}", i + 1)).collect()
            }
        };
        let mut out = String::new();
        out.push_str(&format!("% {name}(w, v): row w, column v\n"));
        out.push_str(&format!("\\begin{{tabular}}{{l|{}}}\n", "c".repeat(self.n)));
        let header: Vec<String> = datum.elements().map(|v| format!("${}$", word(v))).collect();
        out.push_str(&format!("${name}$ & {} \\\\\n\\hline\n", header.join(" & ")));
        for w in datum.elements() {
            let cells: Vec<String> = datum
                .elements()
                .map(|v| match self.get(w, v) {
                    Some(x) => format!("${}$", x.to_latex()),
                    None => "$0$".to_string(),
                })
                .collect();
            out.push_str(&format!("${}$ & {} \\\\\n", word(w), cells.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}
