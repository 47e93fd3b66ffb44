//! Actors and relations from CSV.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

use crate::NetError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Typology {
    Academic,
    Conservation,
    Institutional,
    Productive,
    Social,
}

impl Typology {
    pub fn as_str(self) -> &'static str {
        match self {
            Typology::Academic => "Academic",
            Typology::Conservation => "Conservation",
            Typology::Institutional => "Institutional",
            Typology::Productive => "Productive",
            Typology::Social => "Social",
        }
    }

    fn parse(text: &str) -> Result<Typology, NetError> {
        match text.trim().to_ascii_lowercase().as_str() {
            "academic" => Ok(Typology::Academic),
            "conservation" => Ok(Typology::Conservation),
            "institutional" => Ok(Typology::Institutional),
            "productive" => Ok(Typology::Productive),
            "social" => Ok(Typology::Social),
            _ => Err(NetError::UnknownTypology(text.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Actor {
    pub id: String,
    pub name: String,
    pub municipality: String,
    pub typology: Typology,
    pub lat: f64,
    pub lon: f64,
}

/// One undirected relation; endpoints index into the actor list.
#[derive(Clone, Debug)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub weight: f64,
    pub relation: String,
}

#[derive(Clone, Debug)]
pub struct SocialGraph {
    actors: Vec<Actor>,
    edges: Vec<Edge>,
    index: BTreeMap<String, usize>,
}

const ACTOR_HEADER: [&str; 6] = ["id", "name", "municipality", "typology", "lat", "lon"];
const EDGE_HEADER: [&str; 4] = ["src", "dst", "weight", "relation"];

fn check_header(got: &csv::StringRecord, want: &[&str]) -> Result<(), NetError> {
    let got: Vec<&str> = got.iter().map(str::trim).collect();
    if got != want {
        return Err(NetError::Malformed {
            record: 0,
            message: format!("expected header {}, got {}", want.join(","), got.join(",")),
        });
    }
    Ok(())
}

fn parse_f64(text: &str, record: usize, what: &str) -> Result<f64, NetError> {
    text.trim().parse().map_err(|_| NetError::Malformed {
        record,
        message: format!("{what} {text:?} is not a number"),
    })
}

impl SocialGraph {
    /// Load actors and edges from CSV. Headers are exact; ids must be
    /// unique; edges must join two distinct known actors, at most once per
    /// pair, with finite positive weight.
    pub fn from_csv(actors: impl Read, edges: impl Read) -> Result<SocialGraph, NetError> {
        let mut reader = csv::Reader::from_reader(actors);
        check_header(reader.headers()?, &ACTOR_HEADER)?;
        let mut actor_list = Vec::new();
        let mut index = BTreeMap::new();
        for (row, record) in reader.records().enumerate() {
            let record = record?;
            let field = |i: usize| record.get(i).unwrap_or("").trim().to_string();
            let id = field(0);
            if id.is_empty() {
                return Err(NetError::Malformed {
                    record: row + 1,
                    message: "empty actor id".into(),
                });
            }
            if index.insert(id.clone(), actor_list.len()).is_some() {
                return Err(NetError::DuplicateId(id));
            }
            actor_list.push(Actor {
                id,
                name: field(1),
                municipality: field(2),
                typology: Typology::parse(&field(3))?,
                lat: parse_f64(&field(4), row + 1, "lat")?,
                lon: parse_f64(&field(5), row + 1, "lon")?,
            });
        }

        let mut reader = csv::Reader::from_reader(edges);
        check_header(reader.headers()?, &EDGE_HEADER)?;
        let mut edge_list: Vec<Edge> = Vec::new();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (row, record) in reader.records().enumerate() {
            let record = record?;
            let field = |i: usize| record.get(i).unwrap_or("").trim().to_string();
            let src = field(0);
            let dst = field(1);
            let a = *index
                .get(&src)
                .ok_or_else(|| NetError::UnknownNode(src.clone()))?;
            let b = *index
                .get(&dst)
                .ok_or_else(|| NetError::UnknownNode(dst.clone()))?;
            if a == b {
                return Err(NetError::SelfLoop(src));
            }
            let weight = parse_f64(&field(2), row + 1, "weight")?;
            if !(weight.is_finite() && weight > 0.0) {
                return Err(NetError::BadWeight { src, dst, weight });
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(NetError::DuplicateEdge(src, dst));
            }
            edge_list.push(Edge {
                a,
                b,
                weight,
                relation: field(3),
            });
        }
        Ok(SocialGraph {
            actors: actor_list,
            edges: edge_list,
            index,
        })
    }

    pub fn actors(&self) -> &[Actor] {
        &self.actors
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.actors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actors.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Neighbour list as (other endpoint, weight) per node.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.actors.len()];
        for edge in &self.edges {
            adj[edge.a].push((edge.b, edge.weight));
            adj[edge.b].push((edge.a, edge.weight));
        }
        adj
    }

    /// Bump the weight of every edge touching one of the given actors.
    /// The hook for letting accepted arguments re-weigh their holders' ties.
    pub fn reweight(&mut self, accepted: &BTreeSet<String>, bonus: f64) -> Result<(), NetError> {
        let mut touched = vec![false; self.actors.len()];
        for id in accepted {
            let i = self
                .index_of(id)
                .ok_or_else(|| NetError::UnknownNode(id.clone()))?;
            touched[i] = true;
        }
        for edge in &mut self.edges {
            if touched[edge.a] || touched[edge.b] {
                edge.weight += bonus;
            }
        }
        Ok(())
    }

    /// Graphviz rendering; pass a block label per actor to colour groups.
    pub fn to_dot(&self, blocks: Option<&[usize]>) -> String {
        let mut out = String::from("graph actors {\n");
        for (i, actor) in self.actors.iter().enumerate() {
            let block = blocks
                .and_then(|b| b.get(i))
                .map(|k| format!(", block={k}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "  \"{}\" [label=\"{}\", typology=\"{}\"{}];\n",
                actor.id,
                actor.name,
                actor.typology.as_str(),
                block
            ));
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [weight={}, relation=\"{}\"];\n",
                self.actors[edge.a].id, self.actors[edge.b].id, edge.weight, edge.relation
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) const ACTORS: &str = "\
id,name,municipality,typology,lat,lon
u1,Uni One,Charala,Academic,6.0,-73.1
n1,Nature First,Encino,Conservation,6.1,-73.0
m1,Mayoralty,Charala,Institutional,6.05,-73.15
f1,Farmers,Ocamonte,Productive,6.2,-73.2
";

    pub(crate) const EDGES: &str = "\
src,dst,weight,relation
u1,n1,1.0,research
n1,m1,1.0,funding
m1,f1,1.0,extension
";

    pub(crate) fn graph() -> SocialGraph {
        SocialGraph::from_csv(ACTORS.as_bytes(), EDGES.as_bytes()).unwrap()
    }

    #[test]
    fn loads_actors_and_edges() {
        let g = graph();
        assert_eq!(g.len(), 4);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.actors()[0].typology, Typology::Academic);
        assert_eq!(g.index_of("m1"), Some(2));
    }

    #[test]
    fn rejects_bad_input() {
        let dup = format!("{ACTORS}u1,Again,Charala,Social,6.0,-73.0\n");
        assert!(matches!(
            SocialGraph::from_csv(dup.as_bytes(), EDGES.as_bytes()),
            Err(NetError::DuplicateId(id)) if id == "u1"
        ));

        let unknown = format!("{EDGES}u1,zz,1.0,radio\n");
        assert!(matches!(
            SocialGraph::from_csv(ACTORS.as_bytes(), unknown.as_bytes()),
            Err(NetError::UnknownNode(id)) if id == "zz"
        ));

        let loop_edge = format!("{EDGES}u1,u1,1.0,self\n");
        assert!(matches!(
            SocialGraph::from_csv(ACTORS.as_bytes(), loop_edge.as_bytes()),
            Err(NetError::SelfLoop(_))
        ));

        let zero = format!("{EDGES}u1,f1,0.0,idle\n");
        assert!(matches!(
            SocialGraph::from_csv(ACTORS.as_bytes(), zero.as_bytes()),
            Err(NetError::BadWeight { .. })
        ));

        let dup_edge = format!("{EDGES}n1,u1,2.0,again\n");
        assert!(matches!(
            SocialGraph::from_csv(ACTORS.as_bytes(), dup_edge.as_bytes()),
            Err(NetError::DuplicateEdge(_, _))
        ));

        let bad_typ = ACTORS.replace("Academic", "Artistic");
        assert!(matches!(
            SocialGraph::from_csv(bad_typ.as_bytes(), EDGES.as_bytes()),
            Err(NetError::UnknownTypology(_))
        ));
    }

    #[test]
    fn reweight_bumps_incident_edges_once() {
        let mut g = graph();
        let accepted: BTreeSet<String> = ["n1".to_string()].into_iter().collect();
        g.reweight(&accepted, 1.0).unwrap();
        let weights: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
        // u1--n1 and n1--m1 touch n1; m1--f1 does not
        assert_eq!(weights, vec![2.0, 2.0, 1.0]);

        let missing: BTreeSet<String> = ["ghost".to_string()].into_iter().collect();
        assert!(matches!(
            g.reweight(&missing, 1.0),
            Err(NetError::UnknownNode(_))
        ));
    }

    #[test]
    fn dot_export_names_nodes_and_ties() {
        let g = graph();
        let dot = g.to_dot(Some(&[0, 0, 1, 1]));
        assert!(dot.starts_with("graph actors {"));
        assert!(dot.contains("\"u1\" [label=\"Uni One\", typology=\"Academic\", block=0];"));
        assert!(dot.contains("\"m1\" -- \"f1\" [weight=1, relation=\"extension\"];"));
    }
}
