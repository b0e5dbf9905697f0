#include "nrad/refinement_chain.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

constexpr std::array kAllChains = {ChainId::Th2Dragomir, ChainId::Th2AlDolat,  ChainId::Th3ElHaddad,
                                   ChainId::Th4ElHaddad, ChainId::Th5ElHaddad, ChainId::BomiElHaddad};

}  // namespace

std::string_view to_string(ChainId id) {
  switch (id) {
    case ChainId::Th2Dragomir: return "th2_dragomir";
    case ChainId::Th2AlDolat: return "th2_aldolat";
    case ChainId::Th3ElHaddad: return "th3_elhaddad";
    case ChainId::Th4ElHaddad: return "th4_elhaddad";
    case ChainId::Th5ElHaddad: return "th5_elhaddad";
    case ChainId::BomiElHaddad: return "bomi_elhaddad";
  }
  return "?";
}

ChainId chain_from_name(std::string_view name) {
  for (ChainId id : kAllChains)
    if (to_string(id) == name) return id;
  throw Error(ErrorCode::UnknownChain, "no chain named '" + std::string(name) + "'");
}

std::span<const ChainId> all_chains() { return kAllChains; }

bool is_product_chain(ChainId id) { return id == ChainId::Th2Dragomir || id == ChainId::Th2AlDolat; }

bool non_decreasing(std::span<const ChainLink> links, double rel_tol) {
  for (std::size_t i = 1; i < links.size(); ++i) {
    const double prev = links[i - 1].value;
    const double next = links[i].value;
    if (next < prev - rel_tol * std::max(std::abs(prev), std::abs(next))) return false;
  }
  return true;
}

ChainResult refinement_chain(ChainId id, const BoundInputs& in, double lambda) {
  check_lambda(lambda);
  ChainResult out;
  out.chain_name = std::string(to_string(id));
  auto& links = out.links;

  if (is_product_chain(id)) {
    if (!in.product) throw Error(ErrorCode::DimensionMismatch, out.chain_name + " needs a pair (T, S)");
    const auto& q = *in.product;
    if (id == ChainId::Th2Dragomir) {
      const double u = std::pow(q.w_product, q.r);
      links = {{"w^2r(T*S)", u * u},
               {"th2", formula::th2(lambda, q.sum_2r, q.sum_4r, q.w_cross_2r).check_rhs(u)},
               {"half_norm_4r", 0.5 * q.sum_4r}};
    } else {
      const double u = q.w_product;
      links = {{"w^2(T*S)", u * u},
               {"th2_r1", formula::th2(lambda, q.sum_2, q.sum_4, q.w_cross_2).check_rhs(u)},
               {"al_dolat", formula::al_dolat(lambda, q.sum_2, q.sum_4).check_rhs(u)}};
    }
  } else {
    if (!in.single) throw Error(ErrorCode::InvalidArgument, out.chain_name + " needs single-operator quantities");
    const auto& q = *in.single;
    const double w2 = q.w * q.w;
    const double w4 = w2 * w2;
    switch (id) {
      case ChainId::Th3ElHaddad:
        // g = h = √s: g²(|T|) + h²(|T*|) = |T| + |T*|, cross term w(|T*||T|).
        links = {{"w^2(T)", w2},
                 {"th3_sqrt_pair", formula::th3(lambda, q.abs_sum_1, q.abs_sum_2, q.w_cross_1).check_rhs(q.w)},
                 {"el_haddad_r1", 0.5 * q.abs_sum_2}};
        break;
      case ChainId::Th4ElHaddad:
        links = {{"w^4(T)", w4},
                 {"th4", formula::th4(lambda, q.w_square, q.abs_sum_2, q.abs_sum_4, q.w_cross_2)},
                 {"el_haddad_r2", 0.5 * q.abs_sum_4}};
        break;
      case ChainId::Th5ElHaddad:
        links = {{"w^4(T)", w4},
                 {"th5", formula::th5(lambda, q.w_square, q.abs_sum_2, q.abs_sum_4, q.w_cross_2).check_rhs(w2)},
                 {"el_haddad_r2", 0.5 * q.abs_sum_4}};
        break;
      case ChainId::BomiElHaddad: {
        const std::array<double, 3> sums = {q.even_sums[0], q.abs_sum_2, q.abs_sum_4};
        links = {{"w^4(T)", w4},
                 {"th6_n1", formula::th6(lambda, 1, q.w_square, sums, q.w_cross_2)},
                 {"cor_bomi", formula::cor_bomi(lambda, q.w_square, q.abs_sum_2, q.abs_sum_4)},
                 {"el_haddad_r2", 0.5 * q.abs_sum_4}};
        break;
      }
      default:
        break;
    }
  }
  out.holds = non_decreasing(links);
  return out;
}

ChainResult refinement_chain(const ComplexMatrix& t, const ComplexMatrix* s, std::string_view chain_id,
                             const BoundParams& params) {
  const ChainId id = chain_from_name(chain_id);
  params.validate();
  if (s != nullptr) check_same_dim(t, *s);
  BoundInputs in;
  in.params = params;
  if (is_product_chain(id)) {
    in.product = compute_product_quantities(t, s != nullptr ? *s : t, params.r);
  } else {
    in.single = compute_operator_quantities(t, params);
  }
  return refinement_chain(id, in, params.lambda);
}

}  // namespace nrad
