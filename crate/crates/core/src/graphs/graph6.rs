//! graph6 text format, single-byte size header (n <= 62), plus a small
//! edge-list format `n=<int>;u-v,u-v,...` for inputs with isolated vertices.

use super::Graph;
use crate::error::{Error, Result};

/// Parses a graph6 string. Only the single-byte size field is supported.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("graph6: empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!(
                "graph6: byte {b} outside the printable range 63..126"
            )));
        }
    }
    if bytes[0] == 126 {
        return Err(Error::Parse(
            "graph6: multi-byte size headers (n > 62) are not supported".into(),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let data_bytes = bits_needed.div_ceil(6);
    if bytes.len() != 1 + data_bytes {
        return Err(Error::Parse(format!(
            "graph6: expected {} data bytes for n={n}, got {}",
            data_bytes,
            bytes.len() - 1
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    // column order: (0,1), (0,2),(1,2), (0,3),(1,3),(2,3), ...
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                g.add_edge(u, v);
            }
            bit_index += 1;
            if bit_index >= bits_needed {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    let total_bits = data_bytes * 6;
    for t in bits_needed..total_bits {
        let byte = bytes[1 + t / 6] - 63;
        if (byte >> (5 - t % 6)) & 1 == 1 {
            return Err(Error::Parse("graph6: nonzero trailing padding bits".into()));
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Domain(format!(
            "graph6 single-byte encoding supports n <= 62, got {n}"
        )));
    }
    let mut out = vec![63 + n as u8];
    let bits_needed = n * n.saturating_sub(1) / 2;
    let data_bytes = bits_needed.div_ceil(6);
    let mut data = vec![0u8; data_bytes];
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[bit_index / 6] |= 1 << (5 - bit_index % 6);
            }
            bit_index += 1;
        }
    }
    out.extend(data.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses `[n=<int>;]u-v,u-v,...`. The prefix is required to express
/// isolated vertices; without it n is one more than the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let text = text.trim();
    let (n_spec, edge_part) = match text.split_once(';') {
        Some((head, rest)) => {
            let head = head.trim();
            let Some(num) = head.strip_prefix("n=") else {
                return Err(Error::Parse(format!(
                    "edge list: expected `n=<int>;`, got `{head};`"
                )));
            };
            let n: usize = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("edge list: bad vertex count `{num}`")))?;
            (Some(n), rest.trim())
        }
        None => (None, text),
    };
    let mut edges = Vec::new();
    let mut max_v = 0usize;
    if !edge_part.is_empty() {
        for item in edge_part.split(',') {
            let item = item.trim();
            let Some((a, b)) = item.split_once('-') else {
                return Err(Error::Parse(format!("edge list: bad edge `{item}`")));
            };
            let u: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("edge list: bad vertex `{a}`")))?;
            let v: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("edge list: bad vertex `{b}`")))?;
            max_v = max_v.max(u).max(v);
            edges.push((u, v));
        }
    }
    let n = match n_spec {
        Some(n) => n,
        None if edges.is_empty() => 0,
        None => max_v + 1,
    };
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{catalog_up_to, complete, edgeless};
    use proptest::prelude::*;

    #[test]
    fn known_codes() {
        // "A_" is K_2, "A?" is E_2, "?" is the empty graph
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, complete(2));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!(e2, edgeless(2));
        let e0 = parse_graph6("?").unwrap();
        assert_eq!(e0.n(), 0);
        assert_eq!(encode_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&edgeless(2)).unwrap(), "A?");
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
        // 5-cycle with vertices in cyclic label order
        assert_eq!(
            encode_graph6(&crate::graphs::cycle(5).unwrap()).unwrap(),
            "Dhc"
        );
    }

    #[test]
    fn error_cases() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err()); // missing data byte
        assert!(parse_graph6("A_~~~").is_err()); // extra data
        assert!(parse_graph6("~??").is_err()); // multi-byte header
        assert!(parse_graph6("A\u{1f}").is_err()); // byte below 63
                                                   // n=3 needs 3 bits; a byte with a padding bit set must be rejected
        let bad = String::from_utf8(vec![63 + 3, 63 + 0b000100]).unwrap();
        assert!(parse_graph6(&bad).is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("n=3;0-1,1-2,0-2").unwrap();
        assert_eq!(g, complete(3));
        let g = parse_edge_list("n=4;0-1").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.num_edges(), 1);
        let g = parse_edge_list("0-1,1-2").unwrap();
        assert_eq!(g.n(), 3);
        assert!(parse_edge_list("0-0").is_err());
        assert!(parse_edge_list("n=2;0-5").is_err());
        assert!(parse_edge_list("x=2;0-1").is_err());
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
        assert_eq!(parse_edge_list("n=3;").unwrap(), edgeless(3));
    }

    #[test]
    fn catalog_roundtrip() {
        for g in catalog_up_to(5).unwrap().iter() {
            let enc = encode_graph6(g).unwrap();
            assert_eq!(&parse_graph6(&enc).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn random_roundtrip(n in 0usize..12, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut state = seed;
            for u in 0..n {
                for v in u+1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let enc = encode_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }
}
