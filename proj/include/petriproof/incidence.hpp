/*
 * Copyright (C) 2026 The petriproof Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "petriproof/net.hpp"

namespace petriproof {

template <typename Scalar>
using IncidenceMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar, typename Pick>
IncidenceMatrix<Scalar> arc_matrix(const Net& net, Pick pick) {
    IncidenceMatrix<Scalar> m = IncidenceMatrix<Scalar>::Zero(
        static_cast<Eigen::Index>(net.places().size()), static_cast<Eigen::Index>(net.transitions().size()));
    for (std::size_t a = 0; a < net.arcs().size(); ++a) {
        auto& arc = net.arcs()[a];
        if (!pick(net, arc)) continue;
        m(static_cast<Eigen::Index>(net.arc_place(a)), static_cast<Eigen::Index>(net.arc_transition(a))) +=
            static_cast<Scalar>(arc.multiplicity);
    }
    return m;
}

inline bool from_transition(const Net& net, const ArcDef& arc) {
    return arc.kind == ArcKind::Normal && net.transition_index(arc.source).has_value();
}

inline bool into_transition(const Net& net, const ArcDef& arc) {
    return arc.kind == ArcKind::Normal && net.place_index(arc.source).has_value();
}

}  // namespace detail

/* I+ : [p][t] = multiplicity of t -> p. */
template <typename Scalar = int>
IncidenceMatrix<Scalar> forward_matrix(const Net& net) {
    return detail::arc_matrix<Scalar>(net, detail::from_transition);
}

/* I- : [p][t] = multiplicity of p -> t. */
template <typename Scalar = int>
IncidenceMatrix<Scalar> backward_matrix(const Net& net) {
    return detail::arc_matrix<Scalar>(net, detail::into_transition);
}

template <typename Scalar = int>
IncidenceMatrix<Scalar> combined_matrix(const Net& net) {
    return forward_matrix<Scalar>(net) - backward_matrix<Scalar>(net);
}

/* H : 1 where an inhibitor arc p -o t exists. */
template <typename Scalar = int>
IncidenceMatrix<Scalar> inhibition_matrix(const Net& net) {
    IncidenceMatrix<Scalar> m = detail::arc_matrix<Scalar>(
        net, [](const Net&, const ArcDef& arc) { return arc.kind == ArcKind::Inhibitor; });
    return (m.array() > Scalar(0)).template cast<Scalar>().matrix();
}

template <typename Scalar = int>
struct IncidenceMatrices {
    IncidenceMatrix<Scalar> forward;
    IncidenceMatrix<Scalar> backward;
    IncidenceMatrix<Scalar> combined;
    IncidenceMatrix<Scalar> inhibition;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

template <typename Scalar = int>
IncidenceMatrices<Scalar> incidence(const Net& net) {
    IncidenceMatrices<Scalar> r;
    r.forward = forward_matrix<Scalar>(net);
    r.backward = backward_matrix<Scalar>(net);
    r.combined = r.forward - r.backward;
    r.inhibition = inhibition_matrix<Scalar>(net);
    for (auto& p : net.places()) r.row_labels.push_back(p.display);
    for (auto& t : net.transitions()) r.col_labels.push_back(t.display);
    return r;
}

/* One CSV with FORWARD/BACKWARD/COMBINED/INHIBITION sections. */
std::string to_csv(const IncidenceMatrices<int>& m);
std::string to_json(const IncidenceMatrices<int>& m, const std::string& model);
IncidenceMatrices<int> parse_incidence_csv(const std::string& text);

/* Empty when equal, otherwise one line per differing cell or label. */
std::vector<std::string> compare_incidence(const IncidenceMatrices<int>& expected, const IncidenceMatrices<int>& actual);

}  // namespace petriproof
