#ifndef FQ_VERSION_HPP
#define FQ_VERSION_HPP

#define FQBOUND_VERSION "0.1.0"

#endif
