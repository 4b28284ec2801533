// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Device coupling graphs, operator placement and SWAP routing.

mod map;
mod placement;
mod route;

pub use self::map::{heavy_hex_127, load_coupling_map, parse_coupling_map, CouplingMap};
pub use self::placement::{
    find_star_placement, nearest_placement, place_operator, random_connected_placement, Classification, Placement,
};
pub use self::route::{route, routing_equivalent, Routed};
