#pragma once

namespace pfkit_cli {

enum Exit { kOk = 0, kValidation = 2, kUsage = 3 };

int run(int argc, char** argv);

}  // namespace pfkit_cli
