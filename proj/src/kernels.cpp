#include "triq/kernels.h"

namespace triq::kern {

const Ops& ops() {
    static const Ops* selected = [] {
#if defined(__x86_64__) || defined(__i386__)
        if (__builtin_cpu_supports("avx2")) {
            if (const Ops* a = avx2_ops()) return a;
        }
#endif
        return &scalar_ops();
    }();
    return *selected;
}

}  // namespace triq::kern
