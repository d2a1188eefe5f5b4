use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::network::graph::{HiringNetwork, NodeRegistry};

/// Writes `src,dst,weight` rows sorted by (src name, dst name).
pub fn write_edge_list<W: Write>(net: &HiringNetwork, sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(["src", "dst", "weight"])?;
    let reg = net.registry();
    // ids follow name order, so edge order is already name order.
    for (i, j, w) in net.edges() {
        writer.write_record([reg.name(i), reg.name(j), &w.to_string()])?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads an edge list. Repeated (src, dst) rows are summed.
pub fn load_edge_list<R: Read>(source: R) -> Result<HiringNetwork> {
    let mut reader = csv::Reader::from_reader(source);
    let headers = reader.headers()?.clone();
    let mut column = [0usize; 3];
    for (slot, name) in column.iter_mut().zip(["src", "dst", "weight"]) {
        *slot = headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::Format(format!("missing column `{name}` in header")))?;
    }

    let mut rows = Vec::new();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        let field = |k: usize| row.get(column[k]).unwrap_or("").trim();
        let (src, dst) = (field(0), field(1));
        if src.is_empty() || dst.is_empty() {
            return Err(Error::Row {
                line,
                message: "institution name is empty".into(),
            });
        }
        let weight = match field(2).parse::<u64>() {
            Ok(w) if w > 0 => w,
            _ => {
                return Err(Error::Row {
                    line,
                    message: format!("weight `{}` is not a positive integer", field(2)),
                })
            }
        };
        rows.push((src.to_string(), dst.to_string(), weight));
    }
    if rows.is_empty() {
        return Err(Error::EmptyNetwork);
    }

    let registry =
        NodeRegistry::from_names(rows.iter().flat_map(|(s, d, _)| [s.clone(), d.clone()]));
    let weights: Vec<((usize, usize), u64)> = rows
        .iter()
        .map(|(s, d, w)| {
            let i = registry.id(s).expect("registered");
            let j = registry.id(d).expect("registered");
            ((i, j), *w)
        })
        .collect();
    HiringNetwork::from_weights(registry, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_output() {
        let reg = NodeRegistry::from_names(["B", "A", "C"]);
        let net =
            HiringNetwork::from_weights(reg, [((2, 0), 1), ((0, 1), 4), ((0, 0), 2)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&net, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "src,dst,weight\nA,A,2\nA,B,4\nC,A,1\n"
        );
    }

    #[test]
    fn duplicate_rows_are_summed() {
        let net = load_edge_list("src,dst,weight\nA,B,1\nA,B,2\n".as_bytes()).unwrap();
        assert_eq!(net.weight(0, 1), 3);
    }

    #[test]
    fn rejects_bad_weight() {
        let err = load_edge_list("src,dst,weight\nA,B,0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Row { line: 2, .. }));
        let err = load_edge_list("src,dst,weight\nA,B,x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Row { line: 2, .. }));
    }

    #[test]
    fn rejects_missing_column() {
        let err = load_edge_list("src,weight\nA,1\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("dst"));
    }
}
