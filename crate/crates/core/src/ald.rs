//! Paired binary words and the asymmetric Lee distance.
//!
//! A word of length `n` is a pair of binary strands `(a; b)`, read position by
//! position as symbols of `F_2 x F_2`. Distances come from the weighted
//! confusion graph on the four symbols:
//!
//! ```text
//!            (0;0)
//!     1+λ  /   |   \  1+λ
//!   (1;0) ---λ--- (0;1)       (0;0)-(1;1) has weight 2(1+λ)
//!     1+λ  \   |   /  1+λ
//!            (1;1)
//! ```

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Largest supported word length; both strands live in a `u64`.
pub const MAX_LEN: usize = 64;

/// One position of a paired word, stored as `2a + b`.
///
/// The numeric value coincides with the natural quaternary labelling
/// `(0;0)->0, (0;1)->1, (1;0)->2, (1;1)->3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u8);

impl Symbol {
    pub const ZERO_ZERO: Symbol = Symbol(0);
    pub const ZERO_ONE: Symbol = Symbol(1);
    pub const ONE_ZERO: Symbol = Symbol(2);
    pub const ONE_ONE: Symbol = Symbol(3);

    pub const ALL: [Symbol; 4] = [Symbol(0), Symbol(1), Symbol(2), Symbol(3)];

    pub fn new(a: u8, b: u8) -> Symbol {
        Symbol(((a & 1) << 1) | (b & 1))
    }

    /// Symbol with natural quaternary label `v` (0..=3).
    pub fn from_nat4(v: u8) -> Option<Symbol> {
        (v < 4).then_some(Symbol(v))
    }

    pub fn a(self) -> u8 {
        self.0 >> 1
    }

    pub fn b(self) -> u8 {
        self.0 & 1
    }

    pub fn nat4(self) -> u8 {
        self.0
    }

    pub fn complement(self) -> Symbol {
        Symbol(self.0 ^ 3)
    }

    /// Whether the two strands disagree at this position.
    pub fn is_split(self) -> bool {
        self.a() != self.b()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.a(), self.b())
    }
}

/// Asymmetry parameter; a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lambda(u32);

impl Lambda {
    pub const ONE: Lambda = Lambda(1);

    pub fn new(value: u32) -> Result<Lambda> {
        if value == 0 {
            return Err(invalid("lambda must be a positive integer"));
        }
        Ok(Lambda(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Weight of a Class 1 edge.
    pub fn class1(self) -> u64 {
        self.0 as u64
    }

    /// Weight of a Class 2 edge.
    pub fn class2(self) -> u64 {
        self.0 as u64 + 1
    }

    /// Weight of a Class 3 edge.
    pub fn class3(self) -> u64 {
        2 * (self.0 as u64 + 1)
    }

    /// Symbol-pair distance table indexed by natural labels.
    pub fn symbol_table(self) -> [[u64; 4]; 4] {
        let mut table = [[0u64; 4]; 4];
        for s in Symbol::ALL {
            for t in Symbol::ALL {
                table[s.0 as usize][t.0 as usize] = classify_position(s, t).weight(self);
            }
        }
        table
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Kind of transition between two symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorClass {
    /// `(1;0) <-> (0;1)`.
    Class1,
    /// A single bit flip in one strand.
    Class2,
    /// `(0;0) <-> (1;1)`.
    Class3,
    NoError,
}

impl ErrorClass {
    pub fn weight(self, lambda: Lambda) -> u64 {
        match self {
            ErrorClass::Class1 => lambda.class1(),
            ErrorClass::Class2 => lambda.class2(),
            ErrorClass::Class3 => lambda.class3(),
            ErrorClass::NoError => 0,
        }
    }
}

pub fn classify_position(s: Symbol, t: Symbol) -> ErrorClass {
    if s == t {
        ErrorClass::NoError
    } else if s.complement() != t {
        ErrorClass::Class2
    } else if s.is_split() {
        ErrorClass::Class1
    } else {
        ErrorClass::Class3
    }
}

/// An element of `F_2^n x F_2^n`. Bit `i` of each strand is position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairedWord {
    n: u8,
    a: u64,
    b: u64,
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl PairedWord {
    pub fn zero(n: usize) -> Result<PairedWord> {
        Self::from_strands(n, 0, 0)
    }

    /// Builds a word from two strand bitmasks; bits at or above `n` must be clear.
    pub fn from_strands(n: usize, a: u64, b: u64) -> Result<PairedWord> {
        if n == 0 || n > MAX_LEN {
            return Err(invalid(format!("word length must be in 1..={MAX_LEN}, got {n}")));
        }
        if (a | b) & !mask(n) != 0 {
            return Err(invalid("strand bits set beyond word length"));
        }
        Ok(PairedWord { n: n as u8, a, b })
    }

    /// Builds a word from explicit strand bit sequences.
    pub fn from_bits(a: &[u8], b: &[u8]) -> Result<PairedWord> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
        }
        let pack = |bits: &[u8]| -> Result<u64> {
            bits.iter().enumerate().try_fold(0u64, |acc, (i, &bit)| match bit {
                0 => Ok(acc),
                1 => Ok(acc | 1 << i),
                other => Err(invalid(format!("bit value {other} is not 0 or 1"))),
            })
        };
        Self::from_strands(a.len(), pack(a)?, pack(b)?)
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<PairedWord> {
        let (mut a, mut b) = (0u64, 0u64);
        for (i, s) in symbols.iter().enumerate().take(MAX_LEN) {
            a |= (s.a() as u64) << i;
            b |= (s.b() as u64) << i;
        }
        Self::from_strands(symbols.len(), a, b)
    }

    /// Parses natural quaternary labels, one per position.
    pub fn from_nat4(digits: &[u8]) -> Result<PairedWord> {
        let symbols = digits
            .iter()
            .map(|&d| Symbol::from_nat4(d).ok_or_else(|| invalid(format!("digit {d} is not in 0..=3"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(&symbols)
    }

    /// Word number `index` in the enumeration order used for exhaustive
    /// searches: strand `a` in the low `n` bits, strand `b` above it.
    pub fn from_index(n: usize, index: u128) -> Result<PairedWord> {
        let m = mask(n) as u128;
        if n > 32 || index >> (2 * n) != 0 {
            return Err(invalid("word index out of range"));
        }
        Self::from_strands(n, (index & m) as u64, ((index >> n) & m) as u64)
    }

    pub fn index(&self) -> u128 {
        (self.a as u128) | ((self.b as u128) << self.n)
    }

    /// All `4^n` words in index order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = PairedWord>> {
        if n == 0 || n > 16 {
            return Err(invalid(format!("refusing to enumerate 4^{n} words")));
        }
        Ok((0u64..1u64 << (2 * n)).map(move |i| {
            let m = mask(n);
            PairedWord { n: n as u8, a: i & m, b: (i >> n) & m }
        }))
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn strand_a(&self) -> u64 {
        self.a
    }

    pub fn strand_b(&self) -> u64 {
        self.b
    }

    pub fn symbol(&self, i: usize) -> Symbol {
        Symbol::new(((self.a >> i) & 1) as u8, ((self.b >> i) & 1) as u8)
    }

    pub fn with_symbol(&self, i: usize, s: Symbol) -> PairedWord {
        let bit = 1u64 << i;
        let a = (self.a & !bit) | ((s.a() as u64) << i);
        let b = (self.b & !bit) | ((s.b() as u64) << i);
        PairedWord { n: self.n, a, b }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(move |i| self.symbol(i))
    }

    /// Positions where the strands differ, as a bitmask.
    pub fn support(&self) -> u64 {
        self.a ^ self.b
    }

    /// Pair weight: the number of positions where the two strands differ.
    pub fn weight(&self) -> usize {
        self.support().count_ones() as usize
    }

    /// Strand `a` restricted to the support, packed low-to-high.
    pub fn split_subsequence(&self) -> u64 {
        let support = self.support();
        let mut out = 0u64;
        let mut k = 0;
        for i in 0..self.len() {
            if support >> i & 1 == 1 {
                out |= ((self.a >> i) & 1) << k;
                k += 1;
            }
        }
        out
    }

    /// Symbol-wise sum over `F_2 x F_2`.
    pub fn xor(&self, other: &PairedWord) -> Result<PairedWord> {
        check_len(self, other)?;
        Ok(PairedWord { n: self.n, a: self.a ^ other.a, b: self.b ^ other.b })
    }

    /// Natural quaternary label string, e.g. `"0123"`.
    pub fn to_nat4_string(&self) -> String {
        self.symbols().map(|s| char::from(b'0' + s.nat4())).collect()
    }
}

impl fmt::Display for PairedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strand =
            |bits: u64| -> String { (0..self.len()).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect() };
        write!(f, "({};{})", strand(self.a), strand(self.b))
    }
}

fn check_len(x: &PairedWord, y: &PairedWord) -> Result<()> {
    if x.n != y.n {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(())
}

/// Per-class edge counts between two words of equal length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeCounts {
    pub class1: u32,
    pub class2: u32,
    pub class3: u32,
}

impl EdgeCounts {
    pub fn between(x: &PairedWord, y: &PairedWord) -> Result<EdgeCounts> {
        check_len(x, y)?;
        let m = mask(x.len());
        let sx = x.a ^ x.b;
        let sy = y.a ^ y.b;
        let flips = x.a ^ y.a;
        let differ = (x.a ^ y.a) | (x.b ^ y.b);
        let class1 = sx & sy & flips;
        let class3 = !sx & !sy & flips & m;
        let class2 = differ & !class1 & !class3;
        Ok(EdgeCounts { class1: class1.count_ones(), class2: class2.count_ones(), class3: class3.count_ones() })
    }

    pub fn cost(&self, lambda: Lambda) -> u64 {
        self.class1 as u64 * lambda.class1()
            + self.class2 as u64 * lambda.class2()
            + self.class3 as u64 * lambda.class3()
    }
}

/// Asymmetric Lee distance.
pub fn ald_distance(x: &PairedWord, y: &PairedWord, lambda: Lambda) -> Result<u64> {
    Ok(EdgeCounts::between(x, y)?.cost(lambda))
}

/// Target alphabets for [`map_symbols`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolMap {
    /// Gray labelling into `Z_4`: `(0;0)->1, (1;0)->0, (0;1)->2, (1;1)->3`.
    Gray4,
    /// Natural labelling into `{0,1,2,3}`: `(0;0)->0, (0;1)->1, (1;0)->2, (1;1)->3`.
    Nat4,
    /// Embedding into `Z_10`: `(0;0)->0, (0;1)->1, (1;0)->9, (1;1)->5`.
    Z10,
}

impl SymbolMap {
    pub fn apply(self, s: Symbol) -> u8 {
        // indexed by natural label
        const GRAY4: [u8; 4] = [1, 2, 0, 3];
        const Z10: [u8; 4] = [0, 1, 9, 5];
        match self {
            SymbolMap::Gray4 => GRAY4[s.nat4() as usize],
            SymbolMap::Nat4 => s.nat4(),
            SymbolMap::Z10 => Z10[s.nat4() as usize],
        }
    }
}

pub fn map_symbols(x: &PairedWord, target: SymbolMap) -> Vec<u8> {
    x.symbols().map(|s| target.apply(s)).collect()
}

/// Lee distance over `Z_4`, summed componentwise.
pub fn lee_distance(u: &[u8], v: &[u8]) -> Result<u64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    Ok(u.iter()
        .zip(v)
        .map(|(&x, &y)| {
            let diff = (x as i64 - y as i64).rem_euclid(4);
            diff.min(4 - diff) as u64
        })
        .sum())
}

/// Coordinate permutation combined with positionwise complementation.
///
/// Output position `i` takes input position `sigma[i]`, complemented in both
/// strands when bit `i` of `flip` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    sigma: Vec<usize>,
    flip: u64,
}

impl Automorphism {
    pub fn new(sigma: Vec<usize>, flip: u64) -> Result<Automorphism> {
        let n = sigma.len();
        if n == 0 || n > MAX_LEN {
            return Err(invalid("permutation length out of range"));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(invalid("sigma is not a permutation"));
            }
        }
        if flip & !mask(n) != 0 {
            return Err(invalid("complement mask wider than the permutation"));
        }
        Ok(Automorphism { sigma, flip })
    }

    pub fn identity(n: usize) -> Result<Automorphism> {
        Self::new((0..n).collect(), 0)
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn apply(&self, x: &PairedWord) -> Result<PairedWord> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch { left: x.len(), right: self.len() });
        }
        let (mut a, mut b) = (0u64, 0u64);
        for (i, &src) in self.sigma.iter().enumerate() {
            let z = (self.flip >> i) & 1;
            a |= (((x.a >> src) & 1) ^ z) << i;
            b |= (((x.b >> src) & 1) ^ z) << i;
        }
        PairedWord::from_strands(x.len(), a, b)
    }
}

pub fn apply_automorphism(x: &PairedWord, pi: &Automorphism) -> Result<PairedWord> {
    pi.apply(x)
}
