#include "multirel/fixtures.hpp"

namespace multirel::fixtures {

SingletonBase singleton_base() {
  const Carrier x = standard_carrier(1);
  return SingletonBase{
      x,
      Multirelation(x, x),
      mk_multirelation(x, x, {{"a", "{}"}}),
      mk_multirelation(x, x, {{"a", "{a}"}}),
      mk_multirelation(x, x, {{"a", "{}"}, {"a", "{a}"}}),
  };
}

ParikhCounterexample parikh_counterexample() {
  const Carrier x = standard_carrier(3);
  return ParikhCounterexample{
      x,
      mk_multirelation(x, x, {{"a", "{a,b,c}"}, {"b", "{a,b,c}"}, {"c", "{a,b,c}"}}),
      mk_multirelation(x, x, {{"a", "{b,c}"}, {"b", "{a,c}"}, {"c", "{a,b}"}}),
  };
}

PelegCounterexample peleg_counterexample() {
  const Carrier x = standard_carrier(2);
  return PelegCounterexample{
      x,
      mk_multirelation(x, x, {{"a", "{a,b}"}, {"a", "{a}"}, {"b", "{a}"}}),
      mk_multirelation(x, x, {{"a", "{a}"}, {"a", "{b}"}}),
  };
}

}  // namespace multirel::fixtures
