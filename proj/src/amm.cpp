#include "amm.hpp"

#include <cmath>

#include "error.hpp"

namespace mw {

namespace {

void check_pool(const PoolState& pool) {
  if (!(pool.reserve_token > 0) || !std::isfinite(pool.reserve_token))
    raise(ErrorCode::InvalidArgument, "pool token reserve must be positive");
  if (!(pool.reserve_quote > 0) || !std::isfinite(pool.reserve_quote))
    raise(ErrorCode::InvalidArgument, "pool quote reserve must be positive");
  if (!(pool.fee_fraction >= 0 && pool.fee_fraction <= 0.01))
    raise(ErrorCode::InvalidArgument, "fee_fraction outside [0, 0.01]");
}

void check_amount(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) raise(ErrorCode::InvalidArgument, std::string(what) + " must be positive and finite");
}

}  // namespace

double spot_price(const PoolState& pool) {
  check_pool(pool);
  return pool.reserve_quote / pool.reserve_token;
}

SwapOutcome swap_quote_in(const PoolState& pool, double quote_in) {
  check_pool(pool);
  check_amount(quote_in, "quote_in");
  const double x = pool.reserve_token;
  const double y = pool.reserve_quote;
  const double k = x * y;
  const double effective = quote_in * (1.0 - pool.fee_fraction);
  // Computing the post-trade reserve from k directly (rather than the output
  // first) keeps x' * y' = k to the last bit when fee == 0.
  const double x_new = k / (y + effective);
  SwapOutcome out;
  out.amount_out = x - x_new;
  out.pool = {x_new, y + quote_in, pool.fee_fraction};
  return out;
}

SwapOutcome swap_token_in(const PoolState& pool, double tokens_in) {
  check_pool(pool);
  check_amount(tokens_in, "tokens_in");
  const double x = pool.reserve_token;
  const double y = pool.reserve_quote;
  const double k = x * y;
  const double effective = tokens_in * (1.0 - pool.fee_fraction);
  const double y_new = k / (x + effective);
  SwapOutcome out;
  out.amount_out = y - y_new;
  out.pool = {x + tokens_in, y_new, pool.fee_fraction};
  return out;
}

QuoteCost swap_exact_token_out(const PoolState& pool, double tokens_out) {
  check_pool(pool);
  check_amount(tokens_out, "tokens_out");
  if (!(tokens_out < pool.reserve_token))
    raise(ErrorCode::InvalidArgument, "tokens_out must be less than the token reserve");
  const double x = pool.reserve_token;
  const double y = pool.reserve_quote;
  const double k = x * y;
  const double x_new = x - tokens_out;
  const double curve_in = k / x_new - y;  // quote that must reach the curve
  QuoteCost out;
  out.quote_in = curve_in / (1.0 - pool.fee_fraction);
  // The fee stays in the pool, same as swap_quote_in, so the two are inverses.
  out.pool = {x_new, y + out.quote_in, pool.fee_fraction};
  return out;
}

double cost_to_multiply_price(const PoolState& pool, double multiplier) {
  check_pool(pool);
  if (pool.fee_fraction != 0)
    raise(ErrorCode::InvalidArgument, "cost_to_multiply_price is defined on frictionless pools (fee 0)");
  if (!(multiplier >= 1) || !std::isfinite(multiplier))
    raise(ErrorCode::InvalidArgument, "multiplier must be >= 1");
  const double y = pool.reserve_quote;
  const double dq = y * (std::sqrt(multiplier) - 1.0);
  if (dq == 0) return 0;  // multiplier == 1

  // Postcondition: executing the buy moves spot price to m * old within 1e-9
  // relative.  This is an identity of the curve; a violation means the math
  // above regressed.
  const double before = spot_price(pool);
  SwapOutcome sim = swap_quote_in(pool, dq);
  const double after = spot_price(sim.pool);
  const double rel = std::fabs(after - multiplier * before) / (multiplier * before);
  if (!(rel <= 1e-9))
    raise(ErrorCode::Internal, "cost_to_multiply_price postcondition violated");
  return dq;
}

}  // namespace mw
