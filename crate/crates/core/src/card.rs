//! Physical card model: suit-only marking cards, numbered index cards,
//! stacks, card matrices and the public manipulations performed on them.
//!
//! Every manipulation a protocol may perform in front of the verifier is a
//! method on [`CardMatrix`]. Scrambles refuse to touch face-up cards, so a
//! choreography bug that would leak information surfaces as an error instead
//! of a silently wrong transcript.

use std::fmt;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{violation, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Heart,
    Spade,
    /// Numbered card used only to undo scrambles; never a marker.
    Index(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Facing {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Card {
    pub face: Face,
    pub facing: Facing,
}

impl Card {
    pub fn heart() -> Self {
        Card {
            face: Face::Heart,
            facing: Facing::Down,
        }
    }

    pub fn spade() -> Self {
        Card {
            face: Face::Spade,
            facing: Facing::Down,
        }
    }

    pub fn index(value: u32) -> Self {
        Card {
            face: Face::Index(value),
            facing: Facing::Down,
        }
    }

    pub fn is_heart(&self) -> bool {
        self.face == Face::Heart
    }

    pub fn is_face_down(&self) -> bool {
        self.facing == Facing::Down
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Face::Heart => f.write_str("H"),
            Face::Spade => f.write_str("S"),
            Face::Index(v) => write!(f, "{v}"),
        }
    }
}

/// Ordered pile of cards. Position 0 is the top card (position 1 in the
/// usual 1-based numbering of marker stacks).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Stack {
    cards: Vec<Card>,
}

impl Stack {
    pub fn new(cards: Vec<Card>) -> Self {
        Stack { cards }
    }

    pub fn single(card: Card) -> Self {
        Stack { cards: vec![card] }
    }

    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn hearts(&self) -> usize {
        self.cards.iter().filter(|c| c.is_heart()).count()
    }

    pub fn is_face_down(&self) -> bool {
        self.cards.iter().all(Card::is_face_down)
    }

    pub fn turn_face_down(&mut self) {
        for c in &mut self.cards {
            c.facing = Facing::Down;
        }
    }

    fn turn_face_up(&mut self) {
        for c in &mut self.cards {
            c.facing = Facing::Up;
        }
    }

    /// True if the stack consists of marking cards only.
    pub fn is_marker(&self) -> bool {
        self.cards
            .iter()
            .all(|c| matches!(c.face, Face::Heart | Face::Spade))
    }

    /// Compact suit string, e.g. `SHS`.
    pub fn glyphs(&self) -> String {
        self.cards.iter().map(|c| c.face.to_string()).collect()
    }

    /// Parses a suit string of `H`/`S` characters into a face-down stack.
    pub fn from_glyphs(s: &str) -> Option<Stack> {
        s.chars()
            .map(|ch| match ch {
                'H' | 'h' | '♥' => Some(Card::heart()),
                'S' | 's' | '♠' => Some(Card::spade()),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Stack::new)
    }
}

impl fmt::Display for Stack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.glyphs())
    }
}

impl FromIterator<Card> for Stack {
    fn from_iter<I: IntoIterator<Item = Card>>(iter: I) -> Self {
        Stack::new(iter.into_iter().collect())
    }
}

/// `E_len(pos)`: `len` face-down marking cards with a heart at 1-based
/// position `pos`, or all spades when `pos == 0`.
pub fn encode_marker(len: usize, pos: usize) -> Result<Stack> {
    if len < 1 || pos > len {
        return Err(Error::InvalidEncoding { len, pos });
    }
    Ok((1..=len)
        .map(|p| if p == pos { Card::heart() } else { Card::spade() })
        .collect())
}

/// Inverse of [`encode_marker`]: the 1-based heart position, 0 for all spades.
pub fn decode_marker(stack: &Stack) -> Result<usize> {
    let hearts = stack.hearts();
    if hearts > 1 {
        return Err(Error::MalformedMarker { hearts });
    }
    Ok(stack
        .cards
        .iter()
        .position(Card::is_heart)
        .map_or(0, |p| p + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Rows,
    Columns,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shift {
    /// Each card moves one row lower; the last row wraps to the first.
    Down,
    Up,
}

/// A scramble drawn during a run. Only ever stored in the private section of
/// a transcript.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SecretPermutation {
    pub axis: Axis,
    pub start: usize,
    /// `mapping[k]` is the offset (from `start`) of the line that now sits
    /// at `start + k`.
    pub mapping: Vec<usize>,
}

impl SecretPermutation {
    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(k, &p)| k == p)
    }
}

impl fmt::Display for SecretPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axis = match self.axis {
            Axis::Rows => "rows",
            Axis::Columns => "cols",
        };
        write!(f, "{axis}@{}:", self.start)?;
        for (k, p) in self.mapping.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Rectangular block of matrix cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub rows: Range<usize>,
    pub cols: Range<usize>,
}

impl Region {
    pub fn new(rows: Range<usize>, cols: Range<usize>) -> Self {
        Region { rows, cols }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() || self.cols.is_empty()
    }
}

/// Faces seen when a region is turned face up, row-major.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Observation {
    pub cells: Vec<Vec<Vec<Face>>>,
}

impl Observation {
    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|r| r.is_empty())
    }

    pub fn hearts(&self) -> usize {
        self.positions(Face::Heart).count()
    }

    /// `(row, col)` offsets within the region of every cell holding a heart,
    /// counted once per heart.
    pub fn heart_cells(&self) -> Vec<(usize, usize)> {
        self.positions(Face::Heart).collect()
    }

    fn positions(&self, face: Face) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().enumerate().flat_map(move |(r, row)| {
            row.iter().enumerate().flat_map(move |(c, cell)| {
                cell.iter().filter(move |f| **f == face).map(move |_| (r, c))
            })
        })
    }

    /// Index values in region order, for a region made of index cards.
    pub fn index_values(&self) -> Vec<u32> {
        self.cells
            .iter()
            .flatten()
            .flatten()
            .filter_map(|f| match f {
                Face::Index(v) => Some(*v),
                _ => None,
            })
            .collect()
    }

    /// Canonical text form: rows separated by ` / `, cells by a space, cards
    /// within a cell concatenated. Empty cells render as `-`.
    pub fn pattern(&self) -> String {
        self.cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        if cell.is_empty() {
                            "-".to_string()
                        } else {
                            cell.iter().map(Face::to_string).collect()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

/// Grid of stacks laid out on the table.
///
/// When `index_col` is set, column 0 holds index cards `1..` for the data
/// rows; when `index_row` is set, row 0 holds index cards for the data
/// columns. Cell `(0, 0)` is left empty when both are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Stack>,
    index_row: bool,
    index_col: bool,
}

impl CardMatrix {
    /// Builds an empty matrix with `data_rows × data_cols` data cells plus
    /// the requested face-down index row/column.
    pub fn new(data_rows: usize, data_cols: usize, index_row: bool, index_col: bool) -> Self {
        let rows = data_rows + usize::from(index_row);
        let cols = data_cols + usize::from(index_col);
        let mut m = CardMatrix {
            rows,
            cols,
            cells: vec![Stack::default(); rows * cols],
            index_row,
            index_col,
        };
        if index_col {
            for (k, r) in m.data_rows().enumerate() {
                *m.cell_mut(r, 0) = Stack::single(Card::index(k as u32 + 1));
            }
        }
        if index_row {
            for (k, c) in m.data_cols().enumerate() {
                *m.cell_mut(0, c) = Stack::single(Card::index(k as u32 + 1));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data_rows(&self) -> Range<usize> {
        usize::from(self.index_row)..self.rows
    }

    pub fn data_cols(&self) -> Range<usize> {
        usize::from(self.index_col)..self.cols
    }

    pub fn cell(&self, r: usize, c: usize) -> &Stack {
        &self.cells[r * self.cols + c]
    }

    fn cell_mut(&mut self, r: usize, c: usize) -> &mut Stack {
        &mut self.cells[r * self.cols + c]
    }

    pub fn place(&mut self, r: usize, c: usize, stack: Stack) {
        *self.cell_mut(r, c) = stack;
    }

    pub fn take(&mut self, r: usize, c: usize) -> Stack {
        std::mem::take(self.cell_mut(r, c))
    }

    /// Deals `stack` card by card down column `c`, top card into the first
    /// data row.
    pub fn lay_out(&mut self, c: usize, stack: Stack) -> Result<()> {
        let rows = self.data_rows();
        if stack.len() != rows.len() {
            return Err(Error::MalformedMatrix(format!(
                "stack of {} cards laid out over {} rows",
                stack.len(),
                rows.len()
            )));
        }
        for (r, card) in rows.zip(stack.cards) {
            *self.cell_mut(r, c) = Stack::single(card);
        }
        Ok(())
    }

    /// Reforms the stack dealt by [`lay_out`](Self::lay_out).
    pub fn gather(&mut self, c: usize) -> Stack {
        self.data_rows()
            .flat_map(|r| std::mem::take(self.cell_mut(r, c)).cards)
            .collect()
    }

    fn region_face_down(&self, region: &Region) -> bool {
        region
            .rows
            .clone()
            .all(|r| region.cols.clone().all(|c| self.cell(r, c).is_face_down()))
    }

    /// Applies a uniform permutation to the rows in `range`, entire rows
    /// (index column included) moving together.
    pub fn row_scramble<R: Rng + ?Sized>(
        &mut self,
        range: Range<usize>,
        rng: &mut R,
    ) -> Result<SecretPermutation> {
        if range.end > self.rows {
            return Err(Error::MalformedMatrix(format!(
                "row range {range:?} outside {} rows",
                self.rows
            )));
        }
        if !self.region_face_down(&Region::new(range.clone(), 0..self.cols)) {
            return Err(violation("row scramble over a face-up card"));
        }
        let mut mapping: Vec<usize> = (0..range.len()).collect();
        mapping.shuffle(rng);
        let old = self.cells.clone();
        for (k, &p) in mapping.iter().enumerate() {
            let (dst, src) = (range.start + k, range.start + p);
            for c in 0..self.cols {
                self.cells[dst * self.cols + c] = old[src * self.cols + c].clone();
            }
        }
        Ok(SecretPermutation {
            axis: Axis::Rows,
            start: range.start,
            mapping,
        })
    }

    /// Column analogue of [`row_scramble`](Self::row_scramble).
    pub fn column_scramble<R: Rng + ?Sized>(
        &mut self,
        range: Range<usize>,
        rng: &mut R,
    ) -> Result<SecretPermutation> {
        if range.end > self.cols {
            return Err(Error::MalformedMatrix(format!(
                "column range {range:?} outside {} columns",
                self.cols
            )));
        }
        if !self.region_face_down(&Region::new(0..self.rows, range.clone())) {
            return Err(violation("column scramble over a face-up card"));
        }
        let mut mapping: Vec<usize> = (0..range.len()).collect();
        mapping.shuffle(rng);
        let old = self.cells.clone();
        for r in 0..self.rows {
            for (k, &p) in mapping.iter().enumerate() {
                self.cells[r * self.cols + range.start + k] =
                    old[r * self.cols + range.start + p].clone();
            }
        }
        Ok(SecretPermutation {
            axis: Axis::Columns,
            start: range.start,
            mapping,
        })
    }

    /// Cyclically shifts the data rows of column `c` by one.
    pub fn cyclic_shift(&mut self, c: usize, dir: Shift) {
        let rows: Vec<usize> = self.data_rows().collect();
        if rows.is_empty() {
            return;
        }
        let mut column: Vec<Stack> = rows.iter().map(|&r| self.take(r, c)).collect();
        match dir {
            Shift::Down => column.rotate_right(1),
            Shift::Up => column.rotate_left(1),
        }
        for (r, s) in rows.into_iter().zip(column) {
            self.place(r, c, s);
        }
    }

    /// Turns every card in `region` face up and reports what is seen.
    pub fn reveal(&mut self, region: &Region) -> Observation {
        let mut cells = Vec::with_capacity(region.rows.len());
        for r in region.rows.clone() {
            let mut row = Vec::with_capacity(region.cols.len());
            for c in region.cols.clone() {
                let s = self.cell_mut(r, c);
                s.turn_face_up();
                row.push(s.cards.iter().map(|card| card.face).collect());
            }
            cells.push(row);
        }
        Observation { cells }
    }

    pub fn turn_face_down(&mut self, region: &Region) {
        for r in region.rows.clone() {
            for c in region.cols.clone() {
                self.cell_mut(r, c).turn_face_down();
            }
        }
    }

    pub fn turn_all_face_down(&mut self) {
        for s in &mut self.cells {
            s.turn_face_down();
        }
    }

    /// Region covering the index column's data rows.
    pub fn index_column(&self) -> Region {
        let cols = if self.index_col { 0..1 } else { 0..0 };
        Region::new(self.data_rows(), cols)
    }

    /// Region covering the index row's data columns.
    pub fn index_row(&self) -> Region {
        let rows = if self.index_row { 0..1 } else { 0..0 };
        Region::new(rows, self.data_cols())
    }

    fn face_up_index(&self, r: usize, c: usize) -> Result<u32> {
        match self.cell(r, c).cards() {
            [Card {
                face: Face::Index(v),
                facing: Facing::Up,
            }] => Ok(*v),
            [Card {
                face: Face::Index(_),
                facing: Facing::Down,
            }] => Err(violation("restore with a face-down index card")),
            _ => Err(Error::MalformedMatrix(format!(
                "cell ({r}, {c}) does not hold a single index card"
            ))),
        }
    }

    /// Sorts the data rows (or columns) back into index order using the
    /// face-up index cards.
    pub fn restore_by_index(&mut self, axis: Axis) -> Result<()> {
        let (lines, has_index) = match axis {
            Axis::Rows => (self.data_rows(), self.index_col),
            Axis::Columns => (self.data_cols(), self.index_row),
        };
        if !has_index {
            return Err(Error::MalformedMatrix(format!("no index cards for {axis:?}")));
        }
        let n = lines.len();
        let mut order = vec![usize::MAX; n];
        for (k, line) in lines.clone().enumerate() {
            let v = match axis {
                Axis::Rows => self.face_up_index(line, 0)?,
                Axis::Columns => self.face_up_index(0, line)?,
            } as usize;
            if v == 0 || v > n || order[v - 1] != usize::MAX {
                return Err(Error::MalformedMatrix(format!(
                    "index values are not a permutation of 1..{n}"
                )));
            }
            order[v - 1] = k;
        }
        let old = self.cells.clone();
        let start = lines.start;
        for (dst, &src) in order.iter().enumerate() {
            match axis {
                Axis::Rows => {
                    for c in 0..self.cols {
                        self.cells[(start + dst) * self.cols + c] =
                            old[(start + src) * self.cols + c].clone();
                    }
                }
                Axis::Columns => {
                    for r in 0..self.rows {
                        self.cells[r * self.cols + start + dst] =
                            old[r * self.cols + start + src].clone();
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn column(m: &CardMatrix, c: usize) -> String {
        m.data_rows().map(|r| m.cell(r, c).glyphs()).collect()
    }

    fn single_column(glyphs: &str) -> CardMatrix {
        let mut m = CardMatrix::new(glyphs.len(), 1, false, true);
        m.lay_out(1, Stack::from_glyphs(glyphs).unwrap()).unwrap();
        m
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_marker(3, 2).unwrap().glyphs(), "SHS");
        assert_eq!(encode_marker(4, 3).unwrap().glyphs(), "SSHS");
        assert_eq!(encode_marker(5, 0).unwrap().glyphs(), "SSSSS");
        assert_eq!(encode_marker(1, 1).unwrap().glyphs(), "H");
        assert!(encode_marker(3, 2).unwrap().is_face_down());
    }

    #[test]
    fn encode_rejects_bad_arguments() {
        assert_eq!(
            encode_marker(3, 4),
            Err(Error::InvalidEncoding { len: 3, pos: 4 })
        );
        assert!(encode_marker(0, 0).is_err());
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_marker(&Stack::from_glyphs("SHS").unwrap()), Ok(2));
        assert_eq!(decode_marker(&Stack::from_glyphs("SSS").unwrap()), Ok(0));
        assert_eq!(
            decode_marker(&Stack::from_glyphs("HHS").unwrap()),
            Err(Error::MalformedMarker { hearts: 2 })
        );
    }

    #[test]
    fn shift_down_then_up_is_identity() {
        let mut m = single_column("HSS");
        m.cyclic_shift(1, Shift::Down);
        assert_eq!(column(&m, 1), "SHS");
        m.cyclic_shift(1, Shift::Up);
        assert_eq!(column(&m, 1), "HSS");
    }

    #[test]
    fn n_shifts_are_identity() {
        let mut m = single_column("HSSSS");
        for _ in 0..5 {
            m.cyclic_shift(1, Shift::Down);
        }
        assert_eq!(column(&m, 1), "HSSSS");
    }

    #[test]
    fn scramble_refuses_face_up_cards() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut m = single_column("HSH");
        m.reveal(&Region::new(1..2, 1..2));
        assert!(matches!(
            m.row_scramble(0..3, &mut rng),
            Err(Error::ProtocolViolation(_))
        ));
        assert!(matches!(
            m.column_scramble(1..2, &mut rng),
            Err(Error::ProtocolViolation(_))
        ));
    }

    #[test]
    fn identity_scramble_leaves_matrix_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let original = single_column("HSH");
        loop {
            let mut m = original.clone();
            let p = m.row_scramble(0..3, &mut rng).unwrap();
            if p.is_identity() {
                assert_eq!(m, original);
                break;
            }
            assert_ne!(p.mapping, vec![0, 1, 2]);
        }
    }

    #[test]
    fn reveal_column_reports_hearts() {
        let mut m = single_column("HSH");
        let obs = m.reveal(&Region::new(0..3, 1..2));
        assert_eq!(obs.hearts(), 2);
        assert_eq!(obs.heart_cells(), vec![(0, 0), (2, 0)]);
        assert_eq!(obs.pattern(), "H / S / H");
        assert!(!m.cell(0, 1).is_face_down());
    }

    #[test]
    fn reveal_empty_region() {
        let mut m = single_column("HSH");
        let obs = m.reveal(&Region::new(1..1, 0..2));
        assert!(obs.is_empty());
        assert_eq!(obs.pattern(), "");
    }

    #[test]
    fn scramble_then_restore_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut m = CardMatrix::new(4, 2, true, true);
        for c in 1..3 {
            m.lay_out(c, encode_marker(4, c).unwrap()).unwrap();
        }
        let original = m.clone();
        for _ in 0..2 {
            m.row_scramble(1..5, &mut rng).unwrap();
            m.column_scramble(1..3, &mut rng).unwrap();
        }
        let idx = m.index_row();
        m.reveal(&idx);
        m.restore_by_index(Axis::Columns).unwrap();
        let idx = m.index_column();
        let seen = m.reveal(&idx);
        let mut values = seen.index_values();
        values.sort_unstable();
        assert_eq!(values, vec![1, 2, 3, 4]);
        m.restore_by_index(Axis::Rows).unwrap();
        m.turn_all_face_down();
        assert_eq!(m, original);
    }

    #[test]
    fn restore_detects_duplicate_index() {
        let mut m = single_column("HSH");
        m.place(2, 0, Stack::single(Card::index(1)));
        let idx = m.index_column();
        m.reveal(&idx);
        assert!(matches!(
            m.restore_by_index(Axis::Rows),
            Err(Error::MalformedMatrix(_))
        ));
    }

    #[test]
    fn restore_requires_face_up_index() {
        let mut m = single_column("HSH");
        assert!(matches!(
            m.restore_by_index(Axis::Rows),
            Err(Error::ProtocolViolation(_))
        ));
    }

    proptest! {
        #[test]
        fn encode_decode_roundtrip(len in 1usize..40, frac in 0.0f64..=1.0) {
            let pos = (frac * len as f64).floor() as usize;
            prop_assert_eq!(decode_marker(&encode_marker(len, pos).unwrap()).unwrap(), pos);
        }

        #[test]
        fn scrambles_and_shifts_undo_exactly(
            seed in any::<u64>(),
            rows in 1usize..7,
            ops in proptest::collection::vec(0u8..3, 0..12),
        ) {
            enum Op { Scramble(SecretPermutation), Shifted(Shift) }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut m = CardMatrix::new(rows, 2, false, true);
            m.lay_out(1, encode_marker(rows, 1).unwrap()).unwrap();
            m.lay_out(2, encode_marker(rows, rows).unwrap()).unwrap();
            let original = m.clone();
            let mut log = Vec::new();
            for op in ops {
                match op {
                    0 => log.push(Op::Scramble(m.row_scramble(0..rows, &mut rng).unwrap())),
                    1 => { m.cyclic_shift(2, Shift::Down); log.push(Op::Shifted(Shift::Down)); }
                    _ => { m.cyclic_shift(2, Shift::Up); log.push(Op::Shifted(Shift::Up)); }
                }
                let hearts: usize = (0..rows).map(|r| m.cell(r, 1).hearts() + m.cell(r, 2).hearts()).sum();
                prop_assert_eq!(hearts, 2);
            }
            for op in log.into_iter().rev() {
                match op {
                    Op::Shifted(Shift::Down) => m.cyclic_shift(2, Shift::Up),
                    Op::Shifted(Shift::Up) => m.cyclic_shift(2, Shift::Down),
                    Op::Scramble(p) => {
                        let moved: Vec<Vec<Stack>> = (0..rows)
                            .map(|r| (0..3).map(|c| m.take(r, c)).collect())
                            .collect();
                        for (k, row) in moved.into_iter().enumerate() {
                            for (c, s) in row.into_iter().enumerate() {
                                m.place(p.start + p.mapping[k], c, s);
                            }
                        }
                    }
                }
            }
            prop_assert_eq!(&m, &original);
            m.row_scramble(0..rows, &mut rng).unwrap();
            let idx = m.index_column();
            m.reveal(&idx);
            m.restore_by_index(Axis::Rows).unwrap();
            m.turn_all_face_down();
            prop_assert_eq!(m, original);
        }
    }
}
