//! q-cyclotomic cosets modulo an odd integer, multiplier actions, splittings,
//! existence predicates and the code-count formula.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::{gcd, mul_mod, multiplicative_order, normalize, pow_mod};

/// The orbit `{a, aq, aq^2, ...}` of a residue under multiplication by `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicCoset {
    modulus: u64,
    q: u64,
    rep: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    /// The coset of `a` modulo `modulus`.
    pub fn of(a: u64, modulus: u64, q: u64) -> Result<CyclotomicCoset> {
        check_modulus(modulus, q)?;
        Ok(Self::orbit(a % modulus, modulus, q % modulus))
    }

    fn orbit(a: u64, modulus: u64, q: u64) -> CyclotomicCoset {
        let mut members = vec![a];
        let mut x = mul_mod(a, q, modulus);
        while x != a {
            members.push(x);
            x = mul_mod(x, q, modulus);
        }
        members.sort_unstable();
        CyclotomicCoset {
            modulus,
            q,
            rep: members[0],
            members,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Smallest member.
    pub fn rep(&self) -> u64 {
        self.rep
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.members.binary_search(&(a % self.modulus)).is_ok()
    }
}

fn check_modulus(modulus: u64, q: u64) -> Result<()> {
    if modulus == 0 {
        return Err(Error::InvalidModulus(modulus));
    }
    if gcd(q % modulus, modulus) != 1 && modulus != 1 {
        return Err(Error::NotCoprime {
            a: q as i64,
            modulus,
        });
    }
    Ok(())
}

/// The multiplier `mu_b` applied to a coset: the coset containing `b * c`.
pub fn multiplier_image(c: &CyclotomicCoset, b: i64) -> Result<CyclotomicCoset> {
    let m = c.modulus;
    let b = unit(b, m)?;
    Ok(CyclotomicCoset::orbit(mul_mod(c.rep, b, m), m, c.q))
}

fn unit(b: i64, modulus: u64) -> Result<u64> {
    let r = normalize(b, modulus);
    if modulus != 1 && gcd(r, modulus) != 1 {
        return Err(Error::NotCoprime { a: b, modulus });
    }
    Ok(r)
}

/// All q-cyclotomic cosets mod `nbar`, sorted by representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    modulus: u64,
    q: u64,
    cosets: Vec<CyclotomicCoset>,
    owner: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRecord {
    nbar: u64,
    q: u64,
    cosets: Vec<Vec<u64>>,
}

/// Partitions `Z_nbar` into q-cyclotomic cosets.
pub fn cyclotomic_cosets(nbar: u64, q: u64) -> Result<CosetPartition> {
    check_modulus(nbar, q)?;
    let qr = q % nbar;
    let mut owner = vec![u32::MAX; nbar as usize];
    let mut cosets = Vec::new();
    for a in 0..nbar {
        if owner[a as usize] != u32::MAX {
            continue;
        }
        let c = CyclotomicCoset::orbit(a, nbar, qr);
        for &m in &c.members {
            owner[m as usize] = cosets.len() as u32;
        }
        cosets.push(CyclotomicCoset { q, ..c });
    }
    Ok(CosetPartition {
        modulus: nbar,
        q,
        cosets,
        owner,
    })
}

impl CosetPartition {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `a`.
    pub fn index_of(&self, a: u64) -> usize {
        self.owner[(a % self.modulus) as usize] as usize
    }

    pub fn coset_of(&self, a: u64) -> &CyclotomicCoset {
        &self.cosets[self.index_of(a)]
    }

    /// Index of `mu_b(C)` for the coset at `index`.
    pub fn image_index(&self, index: usize, b: i64) -> Result<usize> {
        let b = unit(b, self.modulus)?;
        Ok(self.index_of(mul_mod(self.cosets[index].rep, b, self.modulus)))
    }

    pub fn to_json(&self) -> String {
        let record = PartitionRecord {
            nbar: self.modulus,
            q: self.q,
            cosets: self.cosets.iter().map(|c| c.members.clone()).collect(),
        };
        serde_json::to_string(&record).expect("plain record")
    }

    /// Parses the JSON form and checks it against a recomputed partition.
    pub fn from_json(s: &str) -> Result<CosetPartition> {
        let record: PartitionRecord =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let partition = cyclotomic_cosets(record.nbar, record.q)?;
        let listed: Vec<&[u64]> = record.cosets.iter().map(Vec::as_slice).collect();
        let expected: Vec<&[u64]> = partition.cosets.iter().map(|c| c.members()).collect();
        if listed != expected {
            return Err(Error::Parse(format!(
                "cosets do not form the {}-cyclotomic partition mod {}",
                record.q, record.nbar
            )));
        }
        Ok(partition)
    }
}

/// A splitting `(Z, X0, X1)` of `Z_nbar` by a multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    modulus: u64,
    q: u64,
    multiplier: i64,
    fixed: Vec<CyclotomicCoset>,
    x0: Vec<CyclotomicCoset>,
    x1: Vec<CyclotomicCoset>,
}

impl Splitting {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn multiplier(&self) -> i64 {
        self.multiplier
    }

    /// `Z`: cosets fixed set-wise by the multiplier.
    pub fn fixed(&self) -> &[CyclotomicCoset] {
        &self.fixed
    }

    pub fn x0(&self) -> &[CyclotomicCoset] {
        &self.x0
    }

    /// `X1[i]` is the image of `X0[i]`.
    pub fn x1(&self) -> &[CyclotomicCoset] {
        &self.x1
    }

    /// Number of swapped coset pairs.
    pub fn t(&self) -> usize {
        self.x0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.x0.is_empty()
    }
}

/// Splits `Z_nbar` by `mu_b` into fixed cosets and swapped pairs. Within a pair
/// the coset with the smaller representative goes to `X0`.
pub fn find_splitting(nbar: u64, q: u64, b: i64) -> Result<Splitting> {
    let partition = cyclotomic_cosets(nbar, q)?;
    let mut fixed = Vec::new();
    let mut x0 = Vec::new();
    let mut x1 = Vec::new();
    for (i, c) in partition.cosets.iter().enumerate() {
        let j = partition.image_index(i, b)?;
        if partition.image_index(j, b)? != i {
            return Err(Error::NotInvolution {
                multiplier: b,
                q,
                modulus: nbar,
            });
        }
        if j == i {
            fixed.push(c.clone());
        } else if i < j {
            x0.push(c.clone());
            x1.push(partition.cosets[j].clone());
        }
    }
    Ok(Splitting {
        modulus: nbar,
        q,
        multiplier: b,
        fixed,
        x0,
        x1,
    })
}

/// Nontrivial Euclidean self-dual cyclic codes of length `2^nu * nbar` over
/// GF(2^r) exist iff no power of `2^r` is `-1 mod nbar`.
pub fn euclidean_exists(nbar: u64, r: u32) -> bool {
    if nbar.is_multiple_of(2) {
        return false;
    }
    let q = pow_mod(2, r as u64, nbar);
    let minus_one = (nbar - 1) % nbar;
    let order = multiplicative_order(q, nbar);
    let mut x = 1u64 % nbar;
    for _ in 0..order {
        x = mul_mod(x, q, nbar);
        if x == minus_one {
            return false;
        }
    }
    true
}

/// Nontrivial Hermitian self-dual cyclic codes of length `2^nu * nbar` over
/// GF(2^(2l)) exist iff no odd power of `2^l` is `-1 mod nbar`.
pub fn hermitian_exists(nbar: u64, ell: u32) -> bool {
    if nbar.is_multiple_of(2) {
        return false;
    }
    let q = pow_mod(2, ell as u64, nbar);
    let q2 = mul_mod(q, q, nbar);
    let minus_one = (nbar - 1) % nbar;
    let order = multiplicative_order(q, nbar);
    // q^(2k+1) for k = 0 .. order-1 covers every odd exponent mod the order.
    let mut x = q;
    for _ in 0..order {
        if x == minus_one {
            return false;
        }
        x = mul_mod(x, q2, nbar);
    }
    true
}

/// `(2^nu + 1)^t`.
pub fn count_selfdual(nu: u32, t: usize) -> BigUint {
    let base = (BigUint::from(1u32) << nu) + 1u32;
    num_traits::pow(base, t)
}
