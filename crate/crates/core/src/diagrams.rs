//! Box diagrams in ℤ², their shape classes, and in/out-subset combinatorics.
//!
//! A box is `(p, q)`: `p` is the horizontal coordinate (the e₁ direction),
//! `q` the vertical one (the e₂ direction).

use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

pub type Cell = (i64, i64);

/// Canonical box order: by q, then by p.
fn cell_key(c: &Cell) -> (i64, i64) {
    (c.1, c.0)
}

/// Nonempty finite set of boxes, translated so that min p = min q = 0,
/// stored in canonical (q, p) order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    boxes: Vec<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeClass {
    Young,
    MinusYoung,
    Skew,
    ConnectedOther,
    Disconnected,
}

impl ShapeClass {
    /// Shapes that carry a commuting pair e_λ.
    pub fn is_pm_skew(self) -> bool {
        matches!(
            self,
            ShapeClass::Young | ShapeClass::MinusYoung | ShapeClass::Skew
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            ShapeClass::Young => "young",
            ShapeClass::MinusYoung => "minus_young",
            ShapeClass::Skew => "skew",
            ShapeClass::ConnectedOther => "connected_other",
            ShapeClass::Disconnected => "disconnected",
        }
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetPair {
    pub nu_in: Vec<Cell>,
    pub nu_out: Vec<Cell>,
    pub shift: (i64, i64),
}

impl Diagram {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Parse("empty diagram".into()));
        }
        let p0 = set.iter().map(|c| c.0).min().unwrap_or(0);
        let q0 = set.iter().map(|c| c.1).min().unwrap_or(0);
        let mut boxes: Vec<Cell> = set.into_iter().map(|(p, q)| (p - p0, q - q0)).collect();
        boxes.sort_by_key(cell_key);
        Ok(Diagram { boxes })
    }

    /// Young diagram with the given row lengths, bottom row first.
    pub fn young(rows: &[usize]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        if rows.contains(&0) {
            return Err(Error::Parse("partition has a zero part".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Diagram::new(young_cells(rows))
    }

    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.boxes
            .binary_search_by_key(&cell_key(&c), cell_key)
            .is_ok()
    }

    /// Basis index of a box in canonical order.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.boxes
            .binary_search_by_key(&cell_key(&c), cell_key)
            .ok()
    }

    pub fn transpose(&self) -> Diagram {
        Diagram::new(self.boxes.iter().map(|&(p, q)| (q, p))).expect("nonempty")
    }

    pub fn negate(&self) -> Diagram {
        Diagram::new(self.boxes.iter().map(|&(p, q)| (-p, -q))).expect("nonempty")
    }

    pub fn is_connected(&self) -> bool {
        is_connected_set(&self.boxes.iter().copied().collect())
    }

    /// Down-closed in ℕ² (after normalization).
    pub fn is_young(&self) -> bool {
        self.boxes.iter().all(|&(p, q)| {
            (p == 0 || self.contains((p - 1, q))) && (q == 0 || self.contains((p, q - 1)))
        })
    }

    /// Order-convex for the product order: a ≤ c ≤ b with a, b inside forces c inside.
    /// Together with connectivity this characterizes differences λ₂ \ λ₁ of Young diagrams.
    pub fn is_order_convex(&self) -> bool {
        for &(ap, aq) in &self.boxes {
            for &(bp, bq) in &self.boxes {
                if ap > bp || aq > bq {
                    continue;
                }
                for p in ap..=bp {
                    for q in aq..=bq {
                        if !self.contains((p, q)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn classify(&self) -> ShapeClass {
        if !self.is_connected() {
            ShapeClass::Disconnected
        } else if self.is_young() {
            ShapeClass::Young
        } else if self.negate().is_young() {
            ShapeClass::MinusYoung
        } else if self.is_order_convex() {
            ShapeClass::Skew
        } else {
            ShapeClass::ConnectedOther
        }
    }

    /// Row lengths bottom first, when the diagram is Young.
    pub fn partition(&self) -> Option<Vec<usize>> {
        if !self.is_young() {
            return None;
        }
        let top = self.boxes.iter().map(|c| c.1).max()?;
        Some(
            (0..=top)
                .map(|q| self.boxes.iter().filter(|c| c.1 == q).count())
                .collect(),
        )
    }

    pub fn width(&self) -> i64 {
        self.boxes.iter().map(|c| c.0).max().unwrap_or(0) + 1
    }

    pub fn height(&self) -> i64 {
        self.boxes.iter().map(|c| c.1).max().unwrap_or(0) + 1
    }

    /// Canonical text: a partition for Young diagrams, otherwise a box list.
    pub fn to_spec(&self) -> String {
        match self.partition() {
            Some(rows) => rows
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(","),
            None => self
                .boxes
                .iter()
                .map(|(p, q)| format!("({p},{q})"))
                .collect::<Vec<_>>()
                .join(";"),
        }
    }

    /// In-subsets: connected, and closed under taking boxes of λ that lie weakly south-west.
    pub fn in_subsets(&self) -> Vec<BTreeSet<Cell>> {
        self.closed_connected_subsets(false)
    }

    /// Out-subsets: connected, and closed under taking boxes of λ that lie weakly north-east.
    pub fn out_subsets(&self) -> Vec<BTreeSet<Cell>> {
        self.closed_connected_subsets(true)
    }

    fn closed_connected_subsets(&self, upward: bool) -> Vec<BTreeSet<Cell>> {
        // Order ideals of the product order on λ, built along a linear extension:
        // a box may join only when every box below it (or above it, for filters) is in.
        let mut order: Vec<Cell> = self.boxes.clone();
        order.sort_by_key(|&(p, q)| if upward { -(p + q) } else { p + q });
        let below = |a: Cell, b: Cell| {
            if upward {
                a.0 >= b.0 && a.1 >= b.1
            } else {
                a.0 <= b.0 && a.1 <= b.1
            }
        };
        let mut out = Vec::new();
        let mut chosen: Vec<bool> = vec![false; order.len()];
        fn rec(
            k: usize,
            order: &[Cell],
            chosen: &mut Vec<bool>,
            below: &dyn Fn(Cell, Cell) -> bool,
            out: &mut Vec<BTreeSet<Cell>>,
        ) {
            if k == order.len() {
                let set: BTreeSet<Cell> = order
                    .iter()
                    .zip(chosen.iter())
                    .filter(|(_, &c)| c)
                    .map(|(b, _)| *b)
                    .collect();
                if !set.is_empty() && is_connected_set(&set) {
                    out.push(set);
                }
                return;
            }
            chosen[k] = false;
            rec(k + 1, order, chosen, below, out);
            let allowed = (0..k).all(|j| chosen[j] || !below(order[j], order[k]));
            if allowed {
                chosen[k] = true;
                rec(k + 1, order, chosen, below, out);
                chosen[k] = false;
            }
        }
        rec(0, &order, &mut chosen, &below, &mut out);
        out.sort();
        out
    }

    /// The pairs (ν_in, ν_out) with ν_out = ν_in + (p, q).
    pub fn subset_pairs(&self, p: i64, q: i64) -> Result<Vec<SubsetPair>> {
        if !self.classify().is_pm_skew() {
            return Err(Error::Shape(format!(
                "{} is not a skew shape",
                self.to_spec()
            )));
        }
        if p < 0 || q < 0 {
            return Err(Error::Precondition(
                "shift must lie in the closed positive quadrant".into(),
            ));
        }
        let outs: HashSet<BTreeSet<Cell>> = self.out_subsets().into_iter().collect();
        let mut pairs = Vec::new();
        for nu_in in self.in_subsets() {
            let nu_out: BTreeSet<Cell> = nu_in.iter().map(|&(a, b)| (a + p, b + q)).collect();
            if outs.contains(&nu_out) {
                let mut i: Vec<Cell> = nu_in.into_iter().collect();
                let mut o: Vec<Cell> = nu_out.into_iter().collect();
                i.sort_by_key(cell_key);
                o.sort_by_key(cell_key);
                pairs.push(SubsetPair {
                    nu_in: i,
                    nu_out: o,
                    shift: (p, q),
                });
            }
        }
        Ok(pairs)
    }
}

fn young_cells(rows: &[usize]) -> Vec<Cell> {
    rows.iter()
        .enumerate()
        .flat_map(|(q, &r)| (0..r as i64).map(move |p| (p, q as i64)))
        .collect()
}

pub(crate) fn is_connected_set(set: &BTreeSet<Cell>) -> bool {
    let Some(&start) = set.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        for nb in [(p + 1, q), (p - 1, q), (p, q + 1), (p, q - 1)] {
            if set.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == set.len()
}

fn parse_partition(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition part {part:?}")))
        })
        .collect()
}

/// Parses `r1,r2,...`, `outer/inner`, or `(p,q);(p,q);...`.
/// A leading `-` negates the parsed shape.
pub fn parse(spec: &str) -> Result<Diagram> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix('-') {
        return Ok(parse(rest)?.negate());
    }
    if s.starts_with('(') {
        let mut cells = Vec::new();
        for item in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
            let inner = item
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad box {item:?}")))?;
            let coords: Vec<i64> = inner
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad box {item:?}")))
                })
                .collect::<Result<_>>()?;
            if coords.len() != 2 {
                return Err(Error::Parse(format!("bad box {item:?}")));
            }
            cells.push((coords[0], coords[1]));
        }
        return Diagram::new(cells);
    }
    if let Some((outer, inner)) = s.split_once('/') {
        let outer_rows = parse_partition(outer)?;
        let outer_d = Diagram::young(&outer_rows)?;
        let inner = inner.trim();
        if inner.is_empty() || inner == "0" {
            return Ok(outer_d);
        }
        let inner_rows = parse_partition(inner)?;
        Diagram::young(&inner_rows)?;
        if inner_rows.len() > outer_rows.len()
            || inner_rows.iter().zip(&outer_rows).any(|(i, o)| i > o)
        {
            return Err(Error::Parse(
                "inner partition is not contained in outer".into(),
            ));
        }
        let inner_set: BTreeSet<Cell> = young_cells(&inner_rows).into_iter().collect();
        return Diagram::new(
            young_cells(&outer_rows)
                .into_iter()
                .filter(|c| !inner_set.contains(c)),
        );
    }
    Diagram::young(&parse_partition(s)?)
}

/// Partitions of n in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Connected box sets of size n up to translation.
fn polyominoes(n: usize) -> BTreeSet<Diagram> {
    let mut level: BTreeSet<Diagram> = BTreeSet::new();
    if n == 0 {
        return level;
    }
    level.insert(Diagram::new([(0, 0)]).expect("nonempty"));
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for d in &level {
            for &(p, q) in d.boxes() {
                for nb in [(p + 1, q), (p - 1, q), (p, q + 1), (p, q - 1)] {
                    if !d.contains(nb) {
                        let cells = d.boxes().iter().copied().chain(std::iter::once(nb));
                        next.insert(Diagram::new(cells).expect("nonempty"));
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// All diagrams with n boxes of the requested class, each once.
pub fn enumerate(n: usize, class: ShapeClass) -> Result<Vec<Diagram>> {
    let cap = crate::max_n();
    if n == 0 || n > cap {
        return Err(Error::Resource(format!(
            "diagram size {n} outside 1..={cap}"
        )));
    }
    match class {
        ShapeClass::Young => partitions(n).iter().map(|r| Diagram::young(r)).collect(),
        ShapeClass::Disconnected => Err(Error::Precondition(
            "disconnected sets are not enumerated".into(),
        )),
        _ => Ok(polyominoes(n)
            .into_iter()
            .filter(|d| d.classify() == class)
            .collect()),
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram[{}]", self.to_spec())
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_hook_and_skew() {
        assert_eq!(parse("2,1").unwrap().boxes(), &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(parse("2,2/1").unwrap().boxes(), &[(1, 0), (0, 1), (1, 1)]);
        assert!(matches!(parse("3,1,0"), Err(Error::Parse(_))));
        assert!(matches!(parse("1,2"), Err(Error::Parse(_))));
        assert!(matches!(parse("2/3"), Err(Error::Parse(_))));
        assert_eq!(parse("(0,0);(2,0)").unwrap().boxes(), &[(0, 0), (2, 0)]);
    }

    #[test]
    fn shape_classes() {
        assert_eq!(parse("3").unwrap().classify(), ShapeClass::Young);
        assert_eq!(
            parse("(0,0);(2,0)").unwrap().classify(),
            ShapeClass::Disconnected
        );
        // 2,2/1 is the hook rotated by a half turn.
        assert_eq!(parse("2,2/1").unwrap().classify(), ShapeClass::MinusYoung);
        assert_eq!(parse("3,2/1").unwrap().classify(), ShapeClass::Skew);
        let plus = parse("(1,0);(0,1);(1,1);(2,1);(1,2)").unwrap();
        assert_eq!(plus.classify(), ShapeClass::ConnectedOther);
    }

    #[test]
    fn hook_subset_pairs() {
        let hook = parse("2,1").unwrap();
        let pairs = hook.subset_pairs(1, 0).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].nu_in, vec![(0, 0)]);
        assert_eq!(pairs[0].nu_out, vec![(1, 0)]);
        assert!(hook.subset_pairs(1, 1).unwrap().is_empty());
        let ident = hook.subset_pairs(0, 0).unwrap();
        assert!(ident.iter().any(|sp| sp.nu_in == hook.boxes()));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(3, ShapeClass::Young).unwrap().len(), 3);
        assert_eq!(enumerate(4, ShapeClass::Young).unwrap().len(), 5);
        let skew3 = enumerate(4, ShapeClass::Skew).unwrap();
        assert!(skew3.contains(&parse("3,2/1").unwrap()));
        let minus3 = enumerate(3, ShapeClass::MinusYoung).unwrap();
        assert!(minus3.contains(&parse("2,2/1").unwrap()));
        assert!(matches!(
            enumerate(100, ShapeClass::Young),
            Err(Error::Resource(_))
        ));
    }
}
