#pragma once

namespace mtk {

// serial is the reference path; parallel uses OpenMP and must agree with it.
enum class Exec { serial, parallel };

}  // namespace mtk
