//! Fully commutative words of G(d,1,n) and their packet decomposition.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use super::catalan::catalan_entry;
use crate::error::{Error, Result};
use crate::free_algebra::Word;
use crate::presentations::{asc, desc, standard_monomials, Family, StdMonomial};

/// A word in `s_0, …, s_{n-1}`: a prefix of `s_{i,1}s_0^k` factors or a head
/// `s_{i,1}s_0^ks^{1,j}`, then descending blocks `s_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FcWord {
    pub prefix_blocks: Vec<(u8, u8)>,
    pub head: Option<(u8, u8, u8)>,
    pub suffix_blocks: Vec<(u8, u8)>,
}

impl FcWord {
    /// The word with the same index sequence as `m`.
    pub fn from_monomial(m: &StdMonomial) -> Self {
        match m {
            StdMonomial::TypeA { blocks } => FcWord { prefix_blocks: vec![], head: None, suffix_blocks: blocks.clone() },
            StdMonomial::Plus { zero_blocks, tail } => {
                FcWord { prefix_blocks: zero_blocks.clone(), head: None, suffix_blocks: tail.clone() }
            }
            StdMonomial::Minus { head, tail } => {
                FcWord { prefix_blocks: vec![], head: Some(*head), suffix_blocks: tail.clone() }
            }
        }
    }

    pub fn word(&self) -> Word {
        let mut out = Vec::new();
        for &(i, k) in &self.prefix_blocks {
            out.extend(desc(i as usize, 1));
            out.extend(std::iter::repeat(0).take(k as usize));
        }
        if let Some((i, k, j)) = self.head {
            out.extend(desc(i as usize, 1));
            out.extend(std::iter::repeat(0).take(k as usize));
            out.extend(asc(1, j as usize));
        }
        for &(i, j) in &self.suffix_blocks {
            out.extend(desc(i as usize, j as usize));
        }
        Word::new(out)
    }

    /// The prefix: the `(i,k)` factors, or `(i₁,k)` of the head.
    pub fn prefix(&self) -> Vec<(u8, u8)> {
        match self.head {
            Some((i, k, _)) => vec![(i, k)],
            None => self.prefix_blocks.clone(),
        }
    }
}

impl fmt::Display for FcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word().render_runs("s"))
    }
}

/// Fully commutative words of G(d,1,n), one per standard monomial of T(d,n).
pub fn fc_words(d: usize, n: usize) -> Result<Vec<FcWord>> {
    let f = Family::gd1n(d, n)?;
    Ok(standard_monomials(&f).iter().map(FcWord::from_monomial).collect())
}

/// Words sharing one prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collection {
    pub prefix: Vec<(u8, u8)>,
    pub members: Vec<FcWord>,
}

/// The collections assigned to packet `s`. Serializes as
/// `{"s": s, "collections": [{"prefix": [...], "size": m}]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packet {
    pub s: usize,
    pub collections: Vec<Collection>,
}

impl Packet {
    /// Number of collections.
    pub fn size(&self) -> usize {
        self.collections.len()
    }
}

/// Prefix and member count of a collection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionSummary {
    pub prefix: Vec<(u8, u8)>,
    pub size: usize,
}

/// The JSON shape of a packet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketSummary {
    pub s: usize,
    pub collections: Vec<CollectionSummary>,
}

impl Packet {
    pub fn summary(&self) -> PacketSummary {
        PacketSummary {
            s: self.s,
            collections: self
                .collections
                .iter()
                .map(|c| CollectionSummary { prefix: c.prefix.clone(), size: c.members.len() })
                .collect(),
        }
    }
}

impl Serialize for Packet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.summary().serialize(s)
    }
}

fn packet_index(prefix: &[(u8, u8)], n: usize) -> usize {
    match prefix {
        [] => n,
        [(i, _)] if *i <= 1 => n - 1,
        [(i, _)] => n - *i as usize,
        [.., (iq, _)] => n - 1 - *iq as usize,
    }
}

/// Groups the fc words by prefix and sorts the collections into packets
/// `s = 0, …, n`. Fails if some collection in packet `s` does not have
/// `C(n,s)` members.
pub fn packet_decomposition(d: usize, n: usize) -> Result<Vec<Packet>> {
    let mut groups: BTreeMap<Word, Collection> = BTreeMap::new();
    for w in fc_words(d, n)? {
        let prefix = w.prefix();
        let key = FcWord { prefix_blocks: prefix.clone(), head: None, suffix_blocks: vec![] }.word();
        groups
            .entry(key)
            .or_insert_with(|| Collection { prefix, members: Vec::new() })
            .members
            .push(w);
    }
    let mut packets: Vec<Packet> = (0..=n).map(|s| Packet { s, collections: Vec::new() }).collect();
    for (_, c) in groups {
        let s = packet_index(&c.prefix, n);
        let expected = catalan_entry(n, s)?;
        if c.members.len() as u128 != expected {
            return Err(Error::Inconsistent(format!(
                "collection with prefix {:?} has {} members, expected C({n},{s}) = {expected}",
                c.prefix,
                c.members.len()
            )));
        }
        packets[s].collections.push(c);
    }
    Ok(packets)
}

/// Number of collections in packet `s`.
pub fn packet_size_formula(d: usize, n: usize, s: usize) -> Result<u128> {
    if s > n || n < 2 || d < 2 {
        return Err(Error::Domain(format!("need d >= 2, n >= 2, s <= n; got d={d}, n={n}, s={s}")));
    }
    let d = d as u128;
    let pow = |e: usize| -> Result<u128> {
        d.checked_pow(e as u32)
            .ok_or_else(|| Error::InvalidParameter("packet size does not fit in 128 bits".into()))
    };
    Ok(if s == n {
        1
    } else if s == n - 1 {
        2 * (d - 1)
    } else if s == 0 {
        (d - 1) * (pow(n - 1)? - 1)
    } else {
        (d - 1) * pow(n - 1 - s)?
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_example() {
        let words = fc_words(3, 3).unwrap();
        assert_eq!(words.len(), 59);
        let w = words.iter().find(|w| w.word().letters() == [0, 0, 1, 0, 0]).unwrap();
        assert_eq!(w.prefix_blocks, vec![(0, 2), (1, 2)]);
        assert_eq!(w.to_string(), "s0^2.s1.s0^2");
        assert!(words.iter().any(|w| w.word().is_empty()));
    }

    #[test]
    fn packets_3_3() {
        let ps = packet_decomposition(3, 3).unwrap();
        let sizes: Vec<usize> = ps.iter().map(Packet::size).collect();
        assert_eq!(sizes, vec![16, 6, 4, 1]);
        assert!(ps[1].collections.iter().all(|c| c.members.len() == 3));
        for s in 0..=3 {
            assert_eq!(packet_size_formula(3, 3, s).unwrap(), sizes[s] as u128);
        }
        let json = serde_json::to_string(&ps[3]).unwrap();
        assert_eq!(json, r#"{"s":3,"collections":[{"prefix":[],"size":5}]}"#);
    }

    #[test]
    fn packet_sums() {
        for (d, n) in [(2, 4), (3, 3), (4, 3)] {
            let total: u128 = (0..=n).map(|s| packet_size_formula(d, n, s).unwrap()).sum();
            assert_eq!(total, (d as u128).pow(n as u32));
        }
        for n in 2usize..=6 {
            for s in 1..=n.saturating_sub(2) {
                assert_eq!(packet_size_formula(2, n, s).unwrap(), 1 << (n - 1 - s));
            }
        }
    }
}
