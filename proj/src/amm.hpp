#pragma once

namespace mw {

// Constant-product pool: reserve_token * reserve_quote = k.  Quote side is
// denominated in USD throughout this codebase.  fee_fraction is the portion
// of the input skimmed before it reaches the curve (0.003 = 30 bps); it is
// configurable because the scenario generator trades with a realistic fee
// while the quote-cost math below is defined on frictionless pools.
struct PoolState {
  double reserve_token = 0;
  double reserve_quote = 0;
  double fee_fraction = 0;  // must stay in [0, 0.01]
};

// quote per token = reserve_quote / reserve_token.
double spot_price(const PoolState& pool);

struct SwapOutcome {
  double amount_out = 0;  // tokens for a buy, quote for a sell
  PoolState pool;         // post-trade reserves
};

// Buy: spend `quote_in` quote, receive tokens.  Only (1 - fee) * quote_in
// reaches the curve; the full quote_in lands in the quote reserve.
SwapOutcome swap_quote_in(const PoolState& pool, double quote_in);

// Sell: spend `tokens_in` tokens, receive quote.  Mirror of swap_quote_in.
SwapOutcome swap_token_in(const PoolState& pool, double tokens_in);

struct QuoteCost {
  double quote_in = 0;  // pre-fee amount the buyer must pay
  PoolState pool;
};

// Buy an exact number of tokens out.  quote_in = (k/(x - dx) - y)/(1 - fee);
// new reserves are (x - dx, y + quote_in * (1 - fee)).
QuoteCost swap_exact_token_out(const PoolState& pool, double tokens_out);

// Quote needed to multiply the spot price by `multiplier` with one buy on a
// frictionless pool: y * (sqrt(m) - 1).  Requires fee_fraction == 0 and
// m >= 1.  The result is verified internally by simulating the buy; a
// post-state price off by more than 1e-9 relative is an internal error.
double cost_to_multiply_price(const PoolState& pool, double multiplier);

}  // namespace mw
