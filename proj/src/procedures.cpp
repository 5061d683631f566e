#include "mproc/procedures.hpp"

#include <functional>

#include "mproc/builder.hpp"

namespace mproc {

Machine make_thermometer_reader(ReaderFormat format) {
  const bool full = format == ReaderFormat::Full;
  MachineBuilder b(full ? "thermometer_reader" : "reference_thermometer");
  b.symbols("0123456789ER");
  if (full) b.symbols(".");

  const StateId error = b.fresh();
  b.write_and_halt(error, "ERR");

  const int positions = full ? 5 : 2;
  StateId digit_start = b.fresh();
  b.add(kInitialState, kBlank, Act{"sample", digit_start, error});

  for (int pos = 0; pos < positions; ++pos) {
    const bool last = pos + 1 == positions;
    StateId next_start = last ? StateId{} : b.fresh();

    // Leaves print the digit, then move on to the next position.
    std::function<void(StateId, int, int)> search = [&](StateId at, int lo, int hi) {
      if (lo == hi) {
        const Symbol digit = static_cast<Symbol>('0' + lo);
        const StateId printed = b.fresh();
        b.add(at, kBlank, Print{digit, printed});
        if (last) return;
        if (full && pos == 1) {
          const StateId point = b.fresh();
          const StateId point_printed = b.fresh();
          b.add(printed, digit, MoveRight{point});
          b.add(point, kBlank, Print{'.', point_printed});
          b.add(point_printed, '.', MoveRight{next_start});
        } else {
          b.add(printed, digit, MoveRight{next_start});
        }
        return;
      }
      const int mid = (lo + hi + 1) / 2;
      const StateId ge = b.fresh();
      const StateId lt = b.fresh();
      b.add(at, kBlank,
            ReadAct{"digit_" + std::to_string(pos) + "_ge_" + std::to_string(mid), ge, lt, error});
      search(ge, mid, hi);
      search(lt, lo, mid - 1);
    };
    search(digit_start, 0, 9);
    digit_start = next_start;
  }
  return b.take();
}

}  // namespace mproc
